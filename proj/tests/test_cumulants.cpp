#include <doctest.h>

#include <random>

#include "moncum/convolution.hpp"
#include "moncum/cumulants.hpp"
#include "moncum/error.hpp"
#include "moncum/partitions.hpp"
#include "oracles.hpp"

using namespace moncum;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

CumulantSequence monotone(std::vector<Rational> r) {
  return CumulantSequence(IndependenceKind::Monotone, std::move(r));
}

std::vector<Rational> pair_only(std::size_t n) {
  std::vector<Rational> r(n);
  r[1] = 1;
  return r;
}

// Moments as a function of a scalar e with r = e * direction: M_n(e) is a
// polynomial of degree <= n in e, recovered exactly from n + 1 samples.
Polynomial moment_in_scale(IndependenceKind kind, const std::vector<Rational>& direction,
                           std::size_t n) {
  std::vector<std::pair<Rational, Rational>> samples;
  for (std::size_t e = 0; e <= n; ++e) {
    std::vector<Rational> r = direction;
    for (auto& v : r) v *= Rational(e);
    samples.emplace_back(Rational(e), moments_from_partition_sum(CumulantSequence(kind, r), n)[n]);
  }
  return lagrange_interpolate(samples, "e");
}

}  // namespace

TEST_CASE("moments_from_monotone_cumulants examples") {
  const MomentSequence arcsine = moments_from_monotone_cumulants(monotone(pair_only(8)), 8);
  CHECK(arcsine == MomentSequence({q(1), q(0), q(1), q(0), q(3, 2), q(0), q(5, 2), q(0), q(35, 8)}));

  const MomentSequence poisson = moments_from_monotone_cumulants(monotone({1, 1, 1, 1}), 4);
  CHECK(poisson == MomentSequence({q(1), q(1), q(2), q(9, 2), q(65, 6)}));
  for (int n = 1; n <= 4; ++n) {
    CHECK(poisson[n] == oracle::monotone_moment_brute({1, 1, 1, 1}, n));
  }

  const MomentSequence point = moments_from_monotone_cumulants(monotone({1, 0, 0, 0, 0, 0}), 6);
  CHECK(point == MomentSequence::point_mass(1, 6));
}

TEST_CASE("monotone formula matches brute-force chain enumeration") {
  std::mt19937_64 rng(201);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = oracle::random_values(rng, 10);
    const MomentSequence m = moments_from_monotone_cumulants(monotone(r), 10);
    for (int n = 1; n <= 10; ++n) CHECK(m[n] == oracle::monotone_moment_brute(r, n));
  }
}

TEST_CASE("monotone_cumulants_from_moments examples") {
  CHECK(monotone_cumulants_from_moments(MomentSequence::point_mass(1, 5)) ==
        monotone({1, 0, 0, 0, 0}));
  CHECK(monotone_cumulants_from_moments(MomentSequence({1, 0, 1, 0, 1})) ==
        monotone({q(0), q(1), q(0), q(-1, 2)}));
  CHECK(monotone_cumulants_from_moments(
            MomentSequence({q(1), q(0), q(1), q(0), q(3, 2), q(0), q(5, 2)})) ==
        monotone(pair_only(6)));
  CHECK_THROWS_AS(monotone_cumulants_from_moments(MomentSequence({1})), Error);
}

TEST_CASE("monotone_cumulants_via_interpolation") {
  // delta_1: M_2(N.X) = N^2 has no linear term.
  CHECK(monotone_cumulants_via_interpolation(MomentSequence::point_mass(1, 3)).value(2) == 0);
  CHECK(monotone_cumulants_via_interpolation(MomentSequence({1, 0, 1, 0, 1})).value(4) ==
        q(-1, 2));

  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 10; ++trial) {
    const MomentSequence m = oracle::random_moments(rng, 1 + trial % 8);
    const CumulantSequence r = monotone_cumulants_via_interpolation(m);
    CHECK(r.value(1) == m[1]);
    CHECK(r == monotone_cumulants_from_moments(m));
  }
}

TEST_CASE("moments_from_partition_sum examples") {
  CHECK(moments_from_partition_sum(CumulantSequence(IndependenceKind::Free, pair_only(4)), 4)[4] == 2);
  CHECK(moments_from_partition_sum(CumulantSequence(IndependenceKind::Boolean, pair_only(4)), 4)[4] == 1);
  CHECK(moments_from_partition_sum(CumulantSequence(IndependenceKind::Commutative, {1, 1, 1}), 3)[3] == 5);

  const MomentSequence mono = moments_from_partition_sum(monotone({1, 1, 1}), 3);
  CHECK(mono[3] == q(9, 2));
  // Brute force over the 12 monotone partitions of {1,2,3}.
  Rational brute;
  for (const auto& p : enumerate_monotone(3)) {
    brute += partition_weight(p.partition(), std::vector<Rational>{1, 1, 1}) /
             factorial(static_cast<unsigned>(p.partition().block_count()));
  }
  CHECK(brute == q(1) + q(5, 2) + q(1));

  CHECK_THROWS_AS(moments_from_partition_sum(monotone({1, 1}), 3), Error);
}

TEST_CASE("partition sums match the classical, free and Boolean recursions") {
  std::mt19937_64 rng(203);
  for (int trial = 0; trial < 10; ++trial) {
    const auto r = oracle::random_values(rng, 8);
    CHECK(moments_from_partition_sum(CumulantSequence(IndependenceKind::Commutative, r), 8) ==
          oracle::classical_moments(r, 8));
    CHECK(moments_from_partition_sum(CumulantSequence(IndependenceKind::Free, r), 8) ==
          oracle::free_moments(r, 8));
    CHECK(moments_from_partition_sum(CumulantSequence(IndependenceKind::Boolean, r), 8) ==
          oracle::boolean_moments(r, 8));
  }
}

TEST_CASE("moments_from_ordered_partition_sum") {
  CHECK(moments_from_ordered_partition_sum(
            CumulantSequence(IndependenceKind::Commutative, {1, 1, 1}), 3)[3] == 5);
  CHECK(moments_from_ordered_partition_sum(CumulantSequence(IndependenceKind::Free, pair_only(2)), 2)[2] == 1);
  CHECK(moments_from_ordered_partition_sum(CumulantSequence(IndependenceKind::Boolean, pair_only(4)), 4)[4] == 1);
  try {
    moments_from_ordered_partition_sum(monotone({1, 1}), 2);
    FAIL("expected invalid kind");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidKind);
  }

  std::mt19937_64 rng(204);
  for (auto kind : {IndependenceKind::Commutative, IndependenceKind::Free, IndependenceKind::Boolean}) {
    const CumulantSequence r(kind, oracle::random_values(rng, 7));
    CHECK(moments_from_ordered_partition_sum(r, 7) == moments_from_partition_sum(r, 7));
  }
}

TEST_CASE("cumulants_from_moments examples") {
  CHECK(cumulants_from_moments(MomentSequence({1, 0, 1, 0, 3}), IndependenceKind::Commutative) ==
        CumulantSequence(IndependenceKind::Commutative, {0, 1, 0, 0}));
  CHECK(cumulants_from_moments(MomentSequence({1, 0, 1, 0, 1}), IndependenceKind::Boolean) ==
        CumulantSequence(IndependenceKind::Boolean, {0, 1, 0, 0}));
  // Free Poisson with rate 1: all free cumulants 1, moments 1, 2, 5, 14.
  CHECK(cumulants_from_moments(MomentSequence({1, 1, 2, 5, 14}), IndependenceKind::Free) ==
        CumulantSequence(IndependenceKind::Free, {1, 1, 1, 1}));
}

TEST_CASE("round trip cumulants -> moments -> cumulants, every kind") {
  std::mt19937_64 rng(205);
  for (auto kind : kAllKinds) {
    for (int trial = 0; trial < 15; ++trial) {
      const std::size_t order = 1 + trial % 8;
      const CumulantSequence r(kind, oracle::random_values(rng, order));
      CHECK(cumulants_from_moments(moments_from_partition_sum(r, order), kind) == r);
    }
  }
}

TEST_CASE("moment_flow examples") {
  const MomentFlow arcsine = moment_flow(monotone(pair_only(6)), 6);
  CHECK(arcsine[2] == Polynomial({q(0), q(1)}));
  CHECK(arcsine[4] == Polynomial({q(0), q(0), q(3, 2)}));

  const MomentFlow point = moment_flow(monotone({1, 0, 0, 0, 0}), 5);
  for (std::size_t n = 0; n <= 5; ++n) CHECK(point[n] == Polynomial::monomial(1, n));

  std::mt19937_64 rng(206);
  const auto r = oracle::random_values(rng, 8);
  const MomentFlow flow = moment_flow(monotone(r), 8);
  CHECK(flow[0] == Polynomial::constant(1));
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(flow[n].coefficient(0) == 0);
    CHECK(flow[n].coefficient(1) == r[n - 1]);
  }
  CHECK(flow.at(1) == moments_from_monotone_cumulants(monotone(r), 8));
  CHECK_THROWS_AS(moment_flow(CumulantSequence(IndependenceKind::Free, r), 8), Error);
  CHECK_THROWS_AS(moment_flow(monotone(r), 9), Error);
}

TEST_CASE("flow polynomials solve the differential system") {
  std::mt19937_64 rng(207);
  const auto r = oracle::random_values(rng, 7);
  const MomentFlow flow = moment_flow(monotone(r), 7);
  for (std::size_t n = 1; n <= 7; ++n) {
    // d/dt m_n = sum_k k r_{n-k+1} m_{k-1}
    std::vector<Rational> derivative;
    const auto c = flow[n].coefficients();
    for (std::size_t i = 1; i < c.size(); ++i) derivative.push_back(c[i] * Rational(i));
    Polynomial rhs;
    for (std::size_t k = 1; k <= n; ++k) rhs += flow[k - 1] * (Rational(k) * r[n - k]);
    CHECK(Polynomial(derivative) == rhs);
  }
}

TEST_CASE("flow polynomials interpolate the integer convolution powers") {
  std::mt19937_64 rng(208);
  const MomentSequence m = oracle::random_moments(rng, 5);
  const MomentFlow flow = moment_flow(monotone_cumulants_from_moments(m), 5);
  for (int n = 0; n <= 6; ++n) CHECK(flow.at(n) == oracle::naive_dot_power(m, n));
}

TEST_CASE("flow_semigroup_check") {
  CHECK(flow_semigroup_check(monotone(pair_only(8)), q(1, 2), q(1, 2), 8));
  CHECK(flow_semigroup_check(monotone(pair_only(8)), q(1), q(0), 8));
  std::mt19937_64 rng(209);
  for (int trial = 0; trial < 5; ++trial) {
    CHECK(flow_semigroup_check(monotone(oracle::random_values(rng, 6)), q(2), q(3), 6));
  }
}

TEST_CASE("monotone three-route agreement up to order 10" * doctest::timeout(120)) {
  std::mt19937_64 rng(210);
  for (int trial = 0; trial < 3; ++trial) {
    const CumulantSequence r = monotone(oracle::random_values(rng, 10));
    const MomentSequence chain = moments_from_monotone_cumulants(r, 10);
    CHECK(chain == moments_from_partition_sum(r, 10));
    CHECK(chain == moment_flow(r, 10).at(1));
  }
}

TEST_CASE("homogeneity: r_n(D_c m) = c^n r_n(m) for every kind") {
  std::mt19937_64 rng(211);
  for (auto kind : kAllKinds) {
    const MomentSequence m = oracle::random_moments(rng, 7);
    const CumulantSequence r = cumulants_from_moments(m, kind);
    for (const Rational& c : {q(2), q(1, 3), q(-1), q(-5, 2)}) {
      const CumulantSequence rc = cumulants_from_moments(dilate(m, c), kind);
      for (std::size_t n = 1; n <= 7; ++n) CHECK(rc.value(n) == c.pow(static_cast<long>(n)) * r.value(n));
    }
  }
}

TEST_CASE("dot additivity: r_n(N.m) = N r_n(m) for every kind") {
  std::mt19937_64 rng(212);
  for (auto kind : kAllKinds) {
    const MomentSequence m = oracle::random_moments(rng, 6);
    const CumulantSequence r = cumulants_from_moments(m, kind);
    MomentSequence sum = MomentSequence::point_mass(0, 6);
    for (int n = 1; n <= 5; ++n) {
      sum = convolve(sum, m, kind);
      const CumulantSequence rn = cumulants_from_moments(sum, kind);
      for (std::size_t k = 1; k <= 6; ++k) CHECK(rn.value(k) == Rational(n) * r.value(k));
    }
  }
}

TEST_CASE("moment polynomials have no constant and no linear terms besides r_n") {
  std::mt19937_64 rng(213);
  for (auto kind : kAllKinds) {
    for (std::size_t j = 1; j <= 6; ++j) {
      std::vector<Rational> unit(6);
      unit[j - 1] = 1;
      for (std::size_t n = 1; n <= 6; ++n) {
        const Polynomial p = moment_in_scale(kind, unit, n);
        CHECK(p.coefficient(0) == 0);
        CHECK(p.coefficient(1) == (n == j ? 1 : 0));
      }
    }
    // Along a random direction the linear part is exactly r_n.
    const auto direction = oracle::random_values(rng, 6);
    for (std::size_t n = 1; n <= 6; ++n) {
      const Polynomial p = moment_in_scale(kind, direction, n);
      CHECK(p.coefficient(0) == 0);
      CHECK(p.coefficient(1) == direction[n - 1]);
    }
  }
}

TEST_CASE("monotone M_n - r_n is a sum of products of at least two cumulants") {
  // Every chain with k >= 2 steps multiplies k cumulants; verify that the
  // remainder vanishes to second order by scaling all cumulants together.
  std::mt19937_64 rng(214);
  const auto r = oracle::random_values(rng, 7);
  for (std::size_t n = 1; n <= 7; ++n) {
    const Polynomial p = moment_in_scale(IndependenceKind::Monotone, r, n);
    Polynomial remainder = p - Polynomial::monomial(r[n - 1], 1, "e");
    CHECK(remainder.coefficient(0) == 0);
    CHECK(remainder.coefficient(1) == 0);
    if (n == 1) CHECK(remainder.is_zero());
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(moments_from_monotone_cumulants(CumulantSequence(IndependenceKind::Free, {1}), 1), Error);
  try {
    moments_from_monotone_cumulants(monotone({1, 1}), 3);
    FAIL("expected truncation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Truncation);
  }
  CHECK_THROWS_AS(MomentSequence({2, 1}), Error);
  CHECK_THROWS_AS(MomentSequence(std::vector<Rational>{}), Error);
  CHECK_THROWS_AS(CumulantSequence(IndependenceKind::Free, {}), Error);
}
