#include "moncum/cumulants.hpp"

#include <string>
#include <utility>

#include "moncum/convolution.hpp"
#include "moncum/error.hpp"
#include "moncum/partitions.hpp"

namespace moncum {

namespace {

void require_kind(const CumulantSequence& r, IndependenceKind kind) {
  if (r.kind() != kind) {
    throw Error(ErrorCode::InvalidKind, "expected " + std::string(to_string(kind)) +
                                            " cumulants, got " +
                                            std::string(to_string(r.kind())));
  }
}

void require_positive_order(const MomentSequence& m) {
  if (m.order() == 0) {
    throw Error(ErrorCode::Truncation, "need at least M_1 to form cumulants");
  }
}

PartitionFamily family_for(IndependenceKind kind) {
  switch (kind) {
    case IndependenceKind::Commutative: return PartitionFamily::All;
    case IndependenceKind::Free: return PartitionFamily::NonCrossing;
    case IndependenceKind::Boolean: return PartitionFamily::Interval;
    case IndependenceKind::Monotone: return PartitionFamily::Monotone;
  }
  return PartitionFamily::All;
}

bool family_member(IndependenceKind kind, const SetPartition& p) {
  switch (kind) {
    case IndependenceKind::Commutative: return true;
    case IndependenceKind::Free: return is_noncrossing(p);
    case IndependenceKind::Boolean: return is_interval(p);
    case IndependenceKind::Monotone: return false;
  }
  return false;
}

// Weighted sum over one block-size class: count * prod r_{size} (/ k! for monotone).
Rational class_weight(const BlockSizeClass& cls, std::span<const Rational> r,
                      IndependenceKind kind) {
  Rational w(cls.count);
  for (int size : cls.sizes) w *= r[size - 1];
  if (kind == IndependenceKind::Monotone) w /= factorial(static_cast<unsigned>(cls.sizes.size()));
  return w;
}

// Chain table for the monotone formula. chain[k][j] sums
// prod_l i_{l-1} r_{i_l - i_{l-1}} over chains 1 = i_0 < ... < i_k = j.
using ChainTable = std::vector<std::vector<Rational>>;

Rational chain_step(const ChainTable& chain, std::size_t k, std::size_t j,
                    std::span<const Rational> r) {
  Rational acc;
  for (std::size_t i = 1; i < j; ++i) {
    if (chain[k - 1][i].is_zero() || r[j - i - 1].is_zero()) continue;
    acc += chain[k - 1][i] * Rational(i) * r[j - i - 1];
  }
  return acc;
}

}  // namespace

MomentFlow::MomentFlow(std::vector<Polynomial> polynomials)
    : polynomials_(std::move(polynomials)) {
  if (polynomials_.empty() || polynomials_[0] != Polynomial::constant(Rational(1))) {
    throw Error(ErrorCode::MalformedInput, "moment flow must start with m_0 = 1");
  }
  for (std::size_t n = 1; n < polynomials_.size(); ++n) {
    if (!polynomials_[n].coefficient(0).is_zero()) {
      throw Error(ErrorCode::MalformedInput,
                  "flow polynomial m_" + std::to_string(n) + " has a constant term");
    }
  }
}

MomentSequence MomentFlow::at(const Rational& t) const {
  std::vector<Rational> m;
  m.reserve(polynomials_.size());
  for (const auto& p : polynomials_) m.push_back(p(t));
  SequenceNotes notes;
  notes.formal_only = t.sign() < 0;
  return MomentSequence(std::move(m), notes);
}

MomentSequence moments_from_monotone_cumulants(const CumulantSequence& r, std::size_t order) {
  require_kind(r, IndependenceKind::Monotone);
  require_order(r, order);
  const auto rv = r.values();
  const std::size_t top = order + 1;

  ChainTable chain(top + 1, std::vector<Rational>(top + 1));
  chain[0][1] = Rational(1);
  for (std::size_t k = 1; k <= order; ++k) {
    for (std::size_t j = k + 1; j <= top; ++j) chain[k][j] = chain_step(chain, k, j, rv);
  }

  std::vector<Rational> m(order + 1);
  m[0] = Rational(1);
  for (std::size_t n = 1; n <= order; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      if (!chain[k][n + 1].is_zero()) m[n] += chain[k][n + 1] / factorial(static_cast<unsigned>(k));
    }
  }
  return MomentSequence(std::move(m));
}

CumulantSequence monotone_cumulants_from_moments(const MomentSequence& m) {
  require_positive_order(m);
  const std::size_t order = m.order();
  const std::size_t top = order + 1;
  std::vector<Rational> r(order);

  // Column j = n + 1 of the chain table needs r_1..r_{n-1} for k >= 2 and
  // contributes r_n alone at k = 1.
  ChainTable chain(top + 1, std::vector<Rational>(top + 1));
  chain[0][1] = Rational(1);
  for (std::size_t n = 1; n <= order; ++n) {
    const std::size_t j = n + 1;
    Rational higher;
    for (std::size_t k = 2; k <= n; ++k) {
      chain[k][j] = chain_step(chain, k, j, r);
      if (!chain[k][j].is_zero()) higher += chain[k][j] / factorial(static_cast<unsigned>(k));
    }
    r[n - 1] = m[n] - higher;
    chain[1][j] = r[n - 1];
  }
  return CumulantSequence(IndependenceKind::Monotone, std::move(r));
}

CumulantSequence monotone_cumulants_via_interpolation(const MomentSequence& m) {
  require_positive_order(m);
  const std::size_t order = m.order();
  // M_k(N.X) has degree <= k in N, so N = 0..order determines every k <= order.
  std::vector<MomentSequence> powers;
  powers.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) powers.push_back(dot_power(m, n));

  std::vector<Rational> r(order);
  std::vector<std::pair<Rational, Rational>> points(order + 1);
  for (std::size_t k = 1; k <= order; ++k) {
    for (std::size_t n = 0; n <= order; ++n) points[n] = {Rational(n), powers[n][k]};
    r[k - 1] = lagrange_interpolate(points, "N").coefficient(1);
  }
  return CumulantSequence(IndependenceKind::Monotone, std::move(r));
}

MomentSequence moments_from_partition_sum(const CumulantSequence& r, std::size_t order) {
  require_order(r, order);
  const PartitionFamily family = family_for(r.kind());
  std::vector<Rational> m(order + 1);
  m[0] = Rational(1);
  for (std::size_t n = 1; n <= order; ++n) {
    for (const auto& cls : block_size_classes(family, static_cast<int>(n))) {
      m[n] += class_weight(cls, r.values(), r.kind());
    }
  }
  return MomentSequence(std::move(m));
}

MomentSequence moments_from_ordered_partition_sum(const CumulantSequence& r,
                                                  std::size_t order) {
  if (r.kind() == IndependenceKind::Monotone) {
    throw Error(ErrorCode::InvalidKind,
                "monotone moments sum over monotone partitions, not all linear orders");
  }
  require_order(r, order);
  std::vector<Rational> m(order + 1);
  m[0] = Rational(1);
  for (std::size_t n = 1; n <= order; ++n) {
    check_enumeration_bound(PartitionFamily::Ordered, static_cast<int>(n));
    Rational total;
    for_each_partition(static_cast<int>(n), [&](const SetPartition& p) {
      if (!family_member(r.kind(), p)) return;
      const Rational w = partition_weight(p, r) /
                         factorial(static_cast<unsigned>(p.block_count()));
      for (std::size_t i = 0, c = enumerate_ordered(p).size(); i < c; ++i) total += w;
    });
    m[n] = std::move(total);
  }
  return MomentSequence(std::move(m));
}

CumulantSequence cumulants_from_moments(const MomentSequence& m, IndependenceKind kind) {
  if (kind == IndependenceKind::Monotone) return monotone_cumulants_from_moments(m);
  require_positive_order(m);
  const PartitionFamily family = family_for(kind);
  std::vector<Rational> r(m.order());
  for (std::size_t n = 1; n <= m.order(); ++n) {
    // Every family contains the one-block partition exactly once; the other
    // classes only involve r_1..r_{n-1}.
    Rational rest;
    for (const auto& cls : block_size_classes(family, static_cast<int>(n))) {
      if (cls.sizes.size() == 1) continue;
      rest += class_weight(cls, r, kind);
    }
    r[n - 1] = m[n] - rest;
  }
  return CumulantSequence(kind, std::move(r));
}

MomentFlow moment_flow(const CumulantSequence& r, std::size_t order) {
  require_kind(r, IndependenceKind::Monotone);
  require_order(r, order);
  std::vector<Polynomial> m;
  m.reserve(order + 1);
  m.push_back(Polynomial::constant(Rational(1), "t"));
  std::vector<Polynomial> integrals{m[0].antiderivative()};
  for (std::size_t n = 1; n <= order; ++n) {
    Polynomial mn("t");
    for (std::size_t k = 1; k <= n; ++k) {
      const Rational& rk = r.value(n - k + 1);
      if (rk.is_zero()) continue;
      mn += integrals[k - 1] * (Rational(k) * rk);
    }
    integrals.push_back(mn.antiderivative());
    m.push_back(std::move(mn));
  }
  return MomentFlow(std::move(m));
}

bool flow_semigroup_check(const CumulantSequence& r, const Rational& t, const Rational& s,
                          std::size_t order) {
  const MomentFlow flow = moment_flow(r, order);
  return monotone_convolve(flow.at(t), flow.at(s)) == flow.at(t + s);
}

}  // namespace moncum
