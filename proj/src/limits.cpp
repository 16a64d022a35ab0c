#include "moncum/limits.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "moncum/convolution.hpp"
#include "moncum/cumulants.hpp"
#include "moncum/error.hpp"

namespace moncum {

namespace {

std::size_t max_order(std::span<const std::size_t> orders) {
  if (orders.empty()) throw Error(ErrorCode::MalformedInput, "no moment orders requested");
  for (std::size_t n : orders) {
    if (n == 0) throw Error(ErrorCode::MalformedInput, "moment orders start at 1");
  }
  return *std::max_element(orders.begin(), orders.end());
}

std::vector<std::size_t> sorted_orders(std::span<const std::size_t> orders) {
  std::vector<std::size_t> out(orders.begin(), orders.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

MomentSequence arcsine_moments(std::size_t order) {
  std::vector<Rational> m(order + 1);
  m[0] = Rational(1);
  // (2j-1)!!/j! = (2j-3)!!/(j-1)! * (2j-1)/j
  Rational even(1);
  for (std::size_t j = 1; 2 * j <= order; ++j) {
    even *= Rational(static_cast<long>(2 * j - 1), static_cast<long>(j));
    m[2 * j] = even;
  }
  return MomentSequence(std::move(m));
}

MomentSequence monotone_poisson_moments(const Rational& lambda, std::size_t order) {
  const std::size_t top = order + 1;
  // weight[k][j]: sum over chains 1 = i_0 < ... < i_k = j of i_0 ... i_{k-1}.
  std::vector<std::vector<Rational>> weight(top + 1, std::vector<Rational>(top + 1));
  weight[0][1] = Rational(1);
  for (std::size_t k = 1; k <= order; ++k) {
    for (std::size_t j = k + 1; j <= top; ++j) {
      for (std::size_t i = k; i < j; ++i) {
        if (!weight[k - 1][i].is_zero()) weight[k][j] += weight[k - 1][i] * Rational(i);
      }
    }
  }
  std::vector<Rational> m(order + 1);
  m[0] = Rational(1);
  for (std::size_t n = 1; n <= order; ++n) {
    Rational power(1);
    for (std::size_t k = 1; k <= n; ++k) {
      power *= lambda;
      m[n] += power * weight[k][n + 1] / factorial(static_cast<unsigned>(k));
    }
  }
  return MomentSequence(std::move(m));
}

MomentSequence clt_step(const MomentSequence& x, std::uint64_t s) {
  if (s == 0) throw Error(ErrorCode::Precondition, "scaling step s must be >= 1");
  require_order(x, 2);
  if (!x[1].is_zero() || x[2] != Rational(1)) {
    throw Error(ErrorCode::Precondition, "central limit input needs mean 0 and variance 1, got M_1 = " +
                                             x[1].to_string() + ", M_2 = " + x[2].to_string());
  }
  return dilate(dot_power(x, s * s), Rational(1) / Rational(s));
}

ConvergenceTable clt_convergence_table(const MomentSequence& x,
                                       std::span<const std::uint64_t> s_values,
                                       std::span<const std::size_t> orders) {
  const std::size_t order = max_order(orders);
  const MomentSequence base = x.truncated(std::max<std::size_t>(order, 2));
  const MomentSequence target = arcsine_moments(base.order());
  const CumulantSequence r = monotone_cumulants_from_moments(base);

  std::vector<std::uint64_t> steps(s_values.begin(), s_values.end());
  std::sort(steps.begin(), steps.end());
  steps.erase(std::unique(steps.begin(), steps.end()), steps.end());

  ConvergenceTable table{"clt", {}};
  for (std::uint64_t s : steps) {
    const MomentSequence xs = clt_step(base, s);
    const CumulantSequence rs = monotone_cumulants_from_moments(xs);
    for (std::size_t n : sorted_orders(orders)) {
      const Rational expected_r = Rational(s).pow(2 - static_cast<long>(n)) * r.value(n);
      table.rows.push_back({s, s * s, n, xs[n], target[n], xs[n] - target[n],
                            rs.value(n) == expected_r});
    }
  }
  return table;
}

MomentSequence poisson_base(const Rational& lambda, std::uint64_t n_summands,
                            std::size_t order) {
  if (n_summands == 0) throw Error(ErrorCode::Precondition, "N must be >= 1");
  std::vector<Rational> m(order + 1, lambda / Rational(n_summands));
  m[0] = Rational(1);
  return MomentSequence(std::move(m));
}

ConvergenceTable poisson_convergence_table(const Rational& lambda,
                                           std::span<const std::uint64_t> n_values,
                                           std::span<const std::size_t> orders) {
  if (lambda.sign() <= 0) throw Error(ErrorCode::Precondition, "lambda must be > 0");
  const std::size_t order = max_order(orders);
  std::vector<PoissonBase> bases;
  for (std::uint64_t n : n_values) bases.emplace_back(n, poisson_base(lambda, n, order));
  return poisson_convergence_table(lambda, bases, orders);
}

void validate_poisson_bases(const Rational& lambda, std::span<const PoissonBase> bases,
                            std::size_t order) {
  if (lambda.sign() <= 0) throw Error(ErrorCode::Precondition, "lambda must be > 0");
  std::map<std::uint64_t, const MomentSequence*> by_n;
  for (const auto& [n, base] : bases) {
    if (n == 0) throw Error(ErrorCode::Precondition, "N must be >= 1");
    require_order(base, order);
    if (!by_n.emplace(n, &base).second) {
      throw Error(ErrorCode::Precondition, "duplicate base for N = " + std::to_string(n));
    }
  }
  for (std::size_t k = 1; k <= order; ++k) {
    std::optional<Rational> previous;
    for (const auto& [n, base] : by_n) {
      const Rational scaled = Rational(n) * (*base)[k];
      if (scaled.sign() <= 0) {
        throw Error(ErrorCode::Precondition, "N M_" + std::to_string(k) + " must be positive at N = " +
                                                 std::to_string(n));
      }
      const Rational gap = (scaled - lambda).abs();
      if (previous && gap > *previous) {
        throw Error(ErrorCode::Precondition,
                    "|N M_" + std::to_string(k) + " - lambda| grows at N = " + std::to_string(n));
      }
      previous = gap;
    }
  }
}

ConvergenceTable poisson_convergence_table(const Rational& lambda,
                                           std::span<const PoissonBase> bases,
                                           std::span<const std::size_t> orders) {
  const std::size_t order = max_order(orders);
  validate_poisson_bases(lambda, bases, order);
  const MomentSequence target = monotone_poisson_moments(lambda, order);

  std::vector<PoissonBase> sorted(bases.begin(), bases.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  ConvergenceTable table{"poisson", {}};
  for (const auto& [n_summands, raw_base] : sorted) {
    const MomentSequence base = raw_base.truncated(order);
    const MomentSequence sum = dot_power(base, n_summands);
    const CumulantSequence r_base = monotone_cumulants_from_moments(base);
    const CumulantSequence r_sum = monotone_cumulants_from_moments(sum);
    for (std::size_t n : sorted_orders(orders)) {
      table.rows.push_back({n_summands, n_summands, n, sum[n], target[n], sum[n] - target[n],
                            r_sum.value(n) == Rational(n_summands) * r_base.value(n)});
    }
  }
  return table;
}

}  // namespace moncum
