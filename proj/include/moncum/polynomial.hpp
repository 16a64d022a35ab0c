#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "moncum/rational.hpp"

namespace moncum {

/// Dense univariate polynomial over the rationals.
///
/// Trailing zero coefficients are always stripped, so the zero polynomial has
/// an empty coefficient list and `degree()` returns std::nullopt.
class Polynomial {
 public:
  explicit Polynomial(std::string variable = "t") : variable_(std::move(variable)) {}
  Polynomial(std::vector<Rational> coefficients, std::string variable = "t");

  static Polynomial constant(Rational c, std::string variable = "t");
  static Polynomial monomial(Rational c, std::size_t power, std::string variable = "t");

  std::optional<std::size_t> degree() const;
  bool is_zero() const { return coefficients_.empty(); }

  /// Coefficient of x^k; zero beyond the degree.
  Rational coefficient(std::size_t k) const;
  std::span<const Rational> coefficients() const { return coefficients_; }
  const std::string& variable() const { return variable_; }

  Rational operator()(const Rational& x) const;

  /// Antiderivative with zero constant term, i.e. x -> integral_0^x p.
  Polynomial antiderivative() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Coefficients only; the variable name is presentation.
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coefficients_ == b.coefficients_;
  }

  /// e.g. "3/2*N^2 - 1/2*N".
  std::string to_string() const;

 private:
  void normalize();

  std::vector<Rational> coefficients_;
  std::string variable_;
};

Rational poly_coefficient(const Polynomial& p, std::size_t k);

/// Unique polynomial of degree < points.size() through every point.
/// Throws MalformedInput on an empty list or repeated abscissa.
Polynomial lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points,
                                std::string variable = "N");

}  // namespace moncum
