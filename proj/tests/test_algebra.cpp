#include <doctest.h>

#include <random>

#include "moncum/error.hpp"
#include "moncum/polynomial.hpp"
#include "moncum/rational.hpp"
#include "moncum/series.hpp"
#include "oracles.hpp"

using namespace moncum;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

Polynomial poly(std::vector<Rational> c, std::string var = "t") { return Polynomial(std::move(c), std::move(var)); }

TruncatedSeries random_reciprocal(std::mt19937_64& rng, std::size_t order) {
  return TruncatedSeries::reciprocal_form(oracle::random_values(rng, order));
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(6, 3).to_string() == "2");
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(1, 3) < Rational(1, 2));

  CHECK(Rational::parse("  -10/4 ") == Rational(-5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("123456789012345678901234567890/3").to_string() ==
        "41152263004115226300411522630");
  CHECK_THROWS_AS(Rational::parse("1.5"), Error);
  CHECK_THROWS_AS(Rational::parse("1/-2"), Error);
  CHECK_THROWS_AS(Rational::parse(""), Error);
  try {
    Rational::parse("3/0");
    FAIL("expected division by zero");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(Rational(2, 3).to_decimal(4) == "0.6667");
  CHECK(Rational(-2, 3).to_decimal(2) == "-0.67");
  CHECK(Rational(1, 8).to_decimal(2) == "0.13");
  CHECK(Rational(65, 6).to_decimal(0) == "11");
  CHECK(Rational(-1, 1000).to_decimal(2) == "0.00");
  CHECK(Rational(7).to_decimal(3) == "7.000");
}

TEST_CASE("poly_coefficient") {
  CHECK(poly_coefficient(Polynomial({0, 0, 1}, "N"), 1) == 0);
  const Polynomial m4({q(0), q(-1, 2), q(3, 2)}, "N");
  CHECK(poly_coefficient(m4, 1) == q(-1, 2));
  CHECK(poly_coefficient(m4, 7) == 0);
  CHECK(poly_coefficient(Polynomial("N"), 0) == 0);
  CHECK(poly_coefficient(Polynomial("N"), 5) == 0);
}

TEST_CASE("polynomial normalization and degree sentinel") {
  const Polynomial zero = poly({0, 0, 0});
  CHECK(zero.is_zero());
  CHECK_FALSE(zero.degree().has_value());
  CHECK(poly({1, 2, 0, 0}).degree() == 1);
  const Polynomial p({q(0), q(-1, 2), q(3, 2)}, "N");
  CHECK(p.to_string() == "3/2*N^2 - 1/2*N");
  CHECK((p - p).is_zero());
  CHECK(p(q(2)) == q(5));
  CHECK(poly({1, 1}) * poly({-1, 1}) == poly({-1, 0, 1}));
  CHECK(poly({3, 0, 3}).antiderivative() == poly({0, 3, 0, 1}));
}

TEST_CASE("lagrange_interpolate") {
  const std::vector<std::pair<Rational, Rational>> parabola{{0, 0}, {1, 1}, {2, 4}};
  CHECK(lagrange_interpolate(parabola) == poly({0, 0, 1}));

  const std::vector<std::pair<Rational, Rational>> line{{0, 0}, {1, 1}, {2, 2}};
  CHECK(lagrange_interpolate(line) == poly({0, 1}));

  // M_4(N.X) for the symmetric +-1 Bernoulli law at N = 0..4, from the brute
  // word expansion of the convolution powers.
  const MomentSequence bernoulli({1, 0, 1, 0, 1});
  std::vector<std::pair<Rational, Rational>> samples;
  for (int n = 0; n <= 4; ++n) {
    samples.emplace_back(n, oracle::naive_dot_power(bernoulli, n)[4]);
  }
  CHECK(samples[2].second == 5);
  CHECK(lagrange_interpolate(samples) == Polynomial({q(0), q(-1, 2), q(3, 2)}));

  const std::vector<std::pair<Rational, Rational>> repeated{{1, 0}, {1, 2}};
  CHECK_THROWS_AS(lagrange_interpolate(repeated), Error);
  CHECK_THROWS_AS(lagrange_interpolate(std::span<const std::pair<Rational, Rational>>{}), Error);
}

TEST_CASE("interpolation reproduces its samples") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::pair<Rational, Rational>> points;
    for (int i = 0; i < 6; ++i) {
      points.emplace_back(Rational(i * 3 - 7, 2), oracle::random_rational(rng));
    }
    const Polynomial p = lagrange_interpolate(points);
    CHECK(p.degree().value_or(0) < points.size());
    for (const auto& [x, y] : points) CHECK(p(x) == y);
  }
}

TEST_CASE("series_reciprocal examples") {
  // delta_0: G = 1/z -> H = z.
  const auto h0 = series_reciprocal(TruncatedSeries::power_at_infinity({1, 0, 0, 0}));
  CHECK(h0.kind() == SeriesKind::ReciprocalForm);
  CHECK(h0 == TruncatedSeries::identity(3));

  // delta_1: G = 1/(z - 1) -> H = z - 1.
  const auto h1 = series_reciprocal(TruncatedSeries::power_at_infinity({1, 1, 1, 1, 1}));
  CHECK(h1 == TruncatedSeries::reciprocal_form({-1, 0, 0, 0}));

  // Arcsine moments (1, 0, 1, 0, 3/2, 0, 5/2): H = z - 1/z - 1/(2 z^3) + ...
  const auto ha = series_reciprocal(
      TruncatedSeries::power_at_infinity({q(1), q(0), q(1), q(0), q(3, 2), q(0), q(5, 2)}));
  // Independent check: G * H = 1, i.e. sum_j M_j c_{k-j} = [k == 0] with c_0 = 1.
  const auto c = ha.coefficients();
  const std::vector<Rational> moments{q(1), q(0), q(1), q(0), q(3, 2), q(0), q(5, 2)};
  for (std::size_t k = 1; k < moments.size(); ++k) {
    Rational acc = moments[k];
    for (std::size_t j = 0; j < k; ++j) acc += moments[j] * c[k - j - 1];
    CHECK(acc == 0);
  }
  CHECK(ha == TruncatedSeries::reciprocal_form({q(0), q(-1), q(0), q(-1, 2), q(0), q(-1, 2)}));

  CHECK_THROWS_AS(series_reciprocal(TruncatedSeries::power_at_infinity({2, 1})), Error);
}

TEST_CASE("series_compose examples") {
  const auto shift = TruncatedSeries::reciprocal_form({-1, 0, 0, 0});
  CHECK(series_compose(shift, shift) == TruncatedSeries::reciprocal_form({-2, 0, 0, 0}));
  // Read back: delta_2 has moments 1, 2, 4, 8, 16.
  const auto g = series_reciprocal(series_compose(shift, shift));
  CHECK(g == TruncatedSeries::power_at_infinity({1, 2, 4, 8, 16}));

  std::mt19937_64 rng(102);
  const auto f = random_reciprocal(rng, 6);
  CHECK(series_compose(f, TruncatedSeries::identity(6)) == f);
  CHECK(series_compose(TruncatedSeries::identity(6), f) == f);

  const auto g_series = TruncatedSeries::power_at_infinity({1, 0});
  CHECK_THROWS_AS(series_compose(g_series, f), Error);
}

TEST_CASE("mixed series orders work at the smaller order") {
  std::mt19937_64 rng(103);
  const auto f = random_reciprocal(rng, 7);
  const auto g = random_reciprocal(rng, 4);
  const auto fg = series_compose(f, g);
  CHECK(fg.order() == 4);
  CHECK(fg == series_compose(f.truncated(4), g));
}

TEST_CASE("reciprocal round trip is exact") {
  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> a = oracle::random_values(rng, 9);
    a[0] = 1;
    const auto g = TruncatedSeries::power_at_infinity(a);
    CHECK(series_reciprocal(series_reciprocal(g)) == g);
    const auto h = random_reciprocal(rng, 8);
    CHECK(series_reciprocal(series_reciprocal(h)) == h);
  }
}

TEST_CASE("series composition is associative up to the truncation order") {
  std::mt19937_64 rng(105);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t order = 1 + trial % 10;
    const auto a = random_reciprocal(rng, order);
    const auto b = random_reciprocal(rng, order);
    const auto c = random_reciprocal(rng, order);
    CHECK(series_compose(series_compose(a, b), c) == series_compose(a, series_compose(b, c)));
  }
}
