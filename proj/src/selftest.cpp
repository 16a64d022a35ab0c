#include "moncum/selftest.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "moncum/convolution.hpp"
#include "moncum/cumulants.hpp"
#include "moncum/limits.hpp"
#include "moncum/partitions.hpp"

namespace moncum {

namespace {

struct Check {
  std::string name;
  std::function<bool()> run;
};

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-10, 10);
  std::uniform_int_distribution<long> den(1, 5);
  return Rational(num(rng), den(rng));
}

std::vector<Rational> random_values(std::mt19937_64& rng, std::size_t count) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_rational(rng));
  return out;
}

MomentSequence random_moments(std::mt19937_64& rng, std::size_t order) {
  std::vector<Rational> m = random_values(rng, order + 1);
  m[0] = Rational(1);
  return MomentSequence(std::move(m));
}

std::uint64_t bell(int n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.back();
}

std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

std::vector<Check> checks() {
  std::vector<Check> out;

  out.push_back({"partition counts (Bell, Catalan, 2^(n-1)), n <= 9", [] {
    for (int n = 1; n <= 9; ++n) {
      if (count_family(PartitionFamily::All, n) != bell(n)) return false;
      if (count_family(PartitionFamily::NonCrossing, n) != catalan(n)) return false;
      if (count_family(PartitionFamily::Interval, n) != (std::uint64_t{1} << (n - 1))) return false;
    }
    return true;
  }});

  out.push_back({"monotone partitions: peeling == filtered ordered partitions, n <= 6", [] {
    for (int n = 1; n <= 6; ++n) {
      std::set<std::string> filtered;
      for (const auto& p : enumerate_partitions(n)) {
        for (const auto& q : enumerate_ordered(p)) {
          if (is_monotone_order(q)) filtered.insert(q.to_string());
        }
      }
      std::set<std::string> peeled;
      for (const auto& q : enumerate_monotone(n)) peeled.insert(q.to_string());
      if (filtered != peeled) return false;
    }
    return true;
  }});

  out.push_back({"monotone moments: chain formula == M(n) sum == flow at t=1, n <= 8", [] {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 5; ++trial) {
      const CumulantSequence r(IndependenceKind::Monotone, random_values(rng, 8));
      const MomentSequence a = moments_from_monotone_cumulants(r, 8);
      if (a != moments_from_partition_sum(r, 8)) return false;
      if (a != moment_flow(r, 8).at(Rational(1))) return false;
    }
    return true;
  }});

  out.push_back({"round trip moments <-> cumulants, all kinds, n <= 7", [] {
    std::mt19937_64 rng(12);
    for (auto kind : kAllKinds) {
      for (int trial = 0; trial < 5; ++trial) {
        const CumulantSequence r(kind, random_values(rng, 7));
        if (cumulants_from_moments(moments_from_partition_sum(r, 7), kind) != r) return false;
      }
    }
    return true;
  }});

  out.push_back({"ordered partition sums equal unordered sums, n <= 6", [] {
    std::mt19937_64 rng(13);
    for (auto kind : {IndependenceKind::Commutative, IndependenceKind::Free,
                      IndependenceKind::Boolean}) {
      const CumulantSequence r(kind, random_values(rng, 6));
      if (moments_from_ordered_partition_sum(r, 6) != moments_from_partition_sum(r, 6)) {
        return false;
      }
    }
    return true;
  }});

  out.push_back({"interpolation cumulants == triangular cumulants, n <= 6", [] {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 5; ++trial) {
      const MomentSequence m = random_moments(rng, 6);
      if (monotone_cumulants_via_interpolation(m) != monotone_cumulants_from_moments(m)) {
        return false;
      }
    }
    return true;
  }});

  out.push_back({"monotone convolution: sum expansion == H composition, n <= 8", [] {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 10; ++trial) {
      const MomentSequence x = random_moments(rng, 8);
      const MomentSequence y = random_moments(rng, 8);
      if (monotone_convolve(x, y) != monotone_convolve_via_transform(x, y)) return false;
    }
    return true;
  }});

  out.push_back({"flow semigroup m(t+s) = m(t) > m(s)", [] {
    std::mt19937_64 rng(16);
    const CumulantSequence r(IndependenceKind::Monotone, random_values(rng, 7));
    return flow_semigroup_check(r, Rational(1, 2), Rational(1, 2), 7) &&
           flow_semigroup_check(r, Rational(2), Rational(3), 7);
  }});

  out.push_back({"arcsine and monotone Poisson laws from their cumulants, n <= 10", [] {
    const CumulantSequence arcsine(IndependenceKind::Monotone,
                                   {0, 1, 0, 0, 0, 0, 0, 0, 0, 0});
    if (moments_from_monotone_cumulants(arcsine, 10) != arcsine_moments(10)) return false;
    for (const Rational& lambda : {Rational(1), Rational(1, 2), Rational(3)}) {
      const CumulantSequence r(IndependenceKind::Monotone, std::vector<Rational>(10, lambda));
      if (moments_from_monotone_cumulants(r, 10) != monotone_poisson_moments(lambda, 10)) {
        return false;
      }
    }
    return true;
  }});

  out.push_back({"CLT rate: M_4(X_N) - 3/2 = -1/(2N) for +-1 Bernoulli", [] {
    const MomentSequence bernoulli({1, 0, 1, 0, 1, 0, 1});
    for (std::uint64_t s : {1, 2, 4, 8}) {
      const MomentSequence xs = clt_step(bernoulli, s);
      const Rational n_summands(s * s);
      if (xs[4] - Rational(3, 2) != Rational(-1) / (Rational(2) * n_summands)) return false;
      if (!xs[1].is_zero() || !xs[3].is_zero() || !xs[5].is_zero()) return false;
    }
    return true;
  }});

  out.push_back({"Poisson small numbers: M_2(X_N) = 2 - 1/N at lambda = 1", [] {
    for (std::uint64_t n : {10, 100}) {
      const MomentSequence sum = dot_power(poisson_base(Rational(1), n, 2), n);
      if (sum[2] != Rational(2) - Rational(1) / Rational(n)) return false;
    }
    return true;
  }});

  out.push_back({"monotone convolution is not commutative", [] {
    const MomentSequence x({1, 1, 0, 0});
    const MomentSequence y({1, 0, 1, 0});
    return monotone_convolve(x, y) != monotone_convolve(y, x);
  }});

  return out;
}

}  // namespace

int run_selftest(std::ostream& out) {
  int failures = 0;
  int total = 0;
  for (const auto& check : checks()) {
    ++total;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
      ok = check.run();
    } catch (const std::exception& e) {
      detail = std::string(" (exception: ") + e.what() + ")";
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    out << (ok ? "[PASS] " : "[FAIL] ") << check.name << detail << " (" << ms << " ms)\n";
    if (!ok) ++failures;
  }
  out << (total - failures) << "/" << total << " checks passed\n";
  return failures;
}

}  // namespace moncum
