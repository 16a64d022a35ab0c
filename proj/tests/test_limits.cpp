#include <doctest.h>

#include <random>

#include "moncum/convolution.hpp"
#include "moncum/cumulants.hpp"
#include "moncum/error.hpp"
#include "moncum/limits.hpp"
#include "moncum/partitions.hpp"
#include "oracles.hpp"

using namespace moncum;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

const MomentSequence kBernoulli({1, 0, 1, 0, 1, 0, 1, 0, 1});

}  // namespace

TEST_CASE("arcsine_moments") {
  const MomentSequence m = arcsine_moments(10);
  CHECK(m[2] == 1);
  CHECK(m[4] == q(3, 2));
  CHECK(m[6] == q(5, 2));
  CHECK(m[8] == q(35, 8));
  for (std::size_t k = 1; k <= 10; k += 2) CHECK(m[k] == 0);
  std::vector<Rational> r(10);
  r[1] = 1;
  CHECK(m == moments_from_monotone_cumulants(CumulantSequence(IndependenceKind::Monotone, r), 10));
  CHECK(arcsine_moments(0) == MomentSequence({1}));
}

TEST_CASE("monotone_poisson_moments") {
  CHECK(monotone_poisson_moments(1, 4) == MomentSequence({q(1), q(1), q(2), q(9, 2), q(65, 6)}));
  CHECK(monotone_poisson_moments(0, 5) == MomentSequence::point_mass(0, 5));
  for (const Rational& lambda : {q(1), q(1, 2), q(3), q(-2, 3)}) {
    const CumulantSequence r(IndependenceKind::Monotone, std::vector<Rational>(9, lambda));
    CHECK(monotone_poisson_moments(lambda, 9) == moments_from_monotone_cumulants(r, 9));
    CHECK(monotone_poisson_moments(lambda, 9) == moments_from_partition_sum(r, 9));
  }
}

TEST_CASE("clt_step") {
  CHECK(clt_step(kBernoulli, 1) == kBernoulli);
  const MomentSequence x4 = clt_step(kBernoulli, 2);
  CHECK(x4[4] == q(11, 8));
  CHECK(x4[2] == 1);

  std::mt19937_64 rng(401);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Rational> m = oracle::random_values(rng, 7);
    m[0] = 1;
    m[1] = 0;
    m[2] = 1;
    const MomentSequence x(m);
    const CumulantSequence r = monotone_cumulants_from_moments(x);
    for (std::uint64_t s : {1, 2, 3}) {
      const MomentSequence xs = clt_step(x, s);
      CHECK(xs[1] == 0);
      CHECK(xs[2] == 1);
      const CumulantSequence rs = monotone_cumulants_from_moments(xs);
      for (std::size_t n = 1; n <= 7; ++n) {
        CHECK(rs.value(n) == Rational(s).pow(2 - static_cast<long>(n)) * r.value(n));
      }
    }
  }

  CHECK_THROWS_AS(clt_step(MomentSequence({1, 1, 2}), 2), Error);
  CHECK_THROWS_AS(clt_step(MomentSequence({1, 0, 2}), 2), Error);
  CHECK_THROWS_AS(clt_step(kBernoulli, 0), Error);
}

TEST_CASE("clt_convergence_table") {
  const std::vector<std::uint64_t> s_values{8, 1, 4, 2};
  const std::vector<std::size_t> orders{4, 2, 3};
  const ConvergenceTable table = clt_convergence_table(kBernoulli, s_values, orders);
  CHECK(table.law == "clt");
  REQUIRE(table.rows.size() == 12);
  CHECK(table.rows.front().step == 1);
  CHECK(table.rows.front().n == 2);
  for (const auto& row : table.rows) {
    CHECK(row.cumulant_scaling_holds);
    CHECK(row.summands == row.step * row.step);
    if (row.n == 4) CHECK(row.difference == q(-1) / Rational(2 * row.summands));
    if (row.n == 2 || row.n == 3) CHECK(row.difference == 0);
  }
  std::vector<Rational> diffs;
  for (const auto& row : table.rows) {
    if (row.n == 4) diffs.push_back(row.difference);
  }
  CHECK(diffs == std::vector<Rational>{q(-1, 2), q(-1, 8), q(-1, 32), q(-1, 128)});
}

TEST_CASE("poisson_convergence_table") {
  const std::vector<std::uint64_t> n_values{1, 10, 100};
  const std::vector<std::size_t> orders{1, 2};
  const ConvergenceTable table = poisson_convergence_table(1, n_values, orders);
  REQUIRE(table.rows.size() == 6);
  // N = 1: a single summand with all moments 1 is delta_1.
  CHECK(table.rows[1].moment == 1);
  CHECK(table.rows[1].difference == -1);
  for (const auto& row : table.rows) {
    CHECK(row.cumulant_scaling_holds);
    if (row.n == 1) CHECK(row.difference == 0);
    if (row.n == 2) CHECK(row.difference == q(-1) / Rational(row.step));
  }
  CHECK_THROWS_AS(poisson_convergence_table(0, n_values, orders), Error);
  CHECK_THROWS_AS(poisson_convergence_table(1, n_values, std::vector<std::size_t>{}), Error);
}

TEST_CASE("poisson cumulants: N r_n(base) approaches lambda at rate 1/N") {
  const Rational lambda(3, 2);
  for (std::uint64_t n : {10, 100, 1000}) {
    const MomentSequence base = poisson_base(lambda, n, 5);
    const CumulantSequence rb = monotone_cumulants_from_moments(base);
    for (std::size_t k = 1; k <= 5; ++k) {
      const Rational gap = (Rational(n) * rb.value(k) - lambda).abs();
      // Only products of >= 2 base moments enter, each O(1/N^2).
      CHECK(gap * Rational(n) <= Rational(100));
    }
  }
}

TEST_CASE("custom Poisson bases are validated") {
  const Rational lambda(1);
  std::vector<PoissonBase> good{{10, MomentSequence({q(1), q(1, 10), q(1, 5), q(1, 10)})},
                                {100, poisson_base(lambda, 100, 3)}};
  const std::vector<std::size_t> orders{1, 2, 3};
  const ConvergenceTable table = poisson_convergence_table(lambda, good, orders);
  CHECK(table.rows.size() == 6);
  for (const auto& row : table.rows) CHECK(row.cumulant_scaling_holds);

  std::vector<PoissonBase> diverging{{10, poisson_base(lambda, 10, 3)},
                                     {100, MomentSequence({q(1), q(1, 100), q(1, 2), q(1, 100)})}};
  CHECK_THROWS_AS(validate_poisson_bases(lambda, diverging, 3), Error);
  std::vector<PoissonBase> duplicate{{10, poisson_base(lambda, 10, 3)}, {10, poisson_base(lambda, 10, 3)}};
  CHECK_THROWS_AS(validate_poisson_bases(lambda, duplicate, 3), Error);
}
