#include "moncum/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "moncum/error.hpp"

namespace moncum {

Polynomial::Polynomial(std::vector<Rational> coefficients, std::string variable)
    : coefficients_(std::move(coefficients)), variable_(std::move(variable)) {
  normalize();
}

Polynomial Polynomial::constant(Rational c, std::string variable) {
  return Polynomial({std::move(c)}, std::move(variable));
}

Polynomial Polynomial::monomial(Rational c, std::size_t power, std::string variable) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = std::move(c);
  return Polynomial(std::move(coeffs), std::move(variable));
}

std::optional<std::size_t> Polynomial::degree() const {
  if (coefficients_.empty()) return std::nullopt;
  return coefficients_.size() - 1;
}

Rational Polynomial::coefficient(std::size_t k) const {
  return k < coefficients_.size() ? coefficients_[k] : Rational{};
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Polynomial Polynomial::antiderivative() const {
  std::vector<Rational> out(coefficients_.size() + 1);
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    out[k + 1] = coefficients_[k] / Rational(k + 1);
  }
  return Polynomial(std::move(out), variable_);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size());
  }
  for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k) {
    coefficients_[k] += rhs.coefficients_[k];
  }
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(rhs.coefficients_.size());
  }
  for (std::size_t k = 0; k < rhs.coefficients_.size(); ++k) {
    coefficients_[k] -= rhs.coefficients_[k];
  }
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& a : coefficients_) a *= c;
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.variable_);
  std::vector<Rational> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return Polynomial(std::move(out), a.variable_);
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coefficients_.size(); k-- > 0;) {
    const Rational& c = coefficients_[k];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) os << mag << '*';
    os << variable_;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

void Polynomial::normalize() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) {
    coefficients_.pop_back();
  }
}

Rational poly_coefficient(const Polynomial& p, std::size_t k) { return p.coefficient(k); }

Polynomial lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points,
                                std::string variable) {
  if (points.empty()) {
    throw Error(ErrorCode::MalformedInput, "interpolation needs at least one point");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].first == points[j].first) {
        throw Error(ErrorCode::MalformedInput,
                    "duplicate interpolation abscissa " + points[i].first.to_string());
      }
    }
  }

  Polynomial result(variable);
  for (std::size_t i = 0; i < points.size(); ++i) {
    // Basis polynomial prod_{j != i} (x - x_j) / (x_i - x_j).
    Polynomial basis = Polynomial::constant(Rational(1), variable);
    Rational denom(1);
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j == i) continue;
      basis = basis * Polynomial({-points[j].first, Rational(1)}, variable);
      denom *= points[i].first - points[j].first;
    }
    result += basis * (points[i].second / denom);
  }
  return result;
}

}  // namespace moncum
