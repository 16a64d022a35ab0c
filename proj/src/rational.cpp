#include "moncum/rational.hpp"

#include <cctype>

#include "moncum/error.hpp"

namespace moncum {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  }
  value_ = mpq_class(numerator, 1);
  value_ /= denominator;
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' ||
      den[0] == '+') {
    throw Error(ErrorCode::MalformedInput,
                "not a rational literal: \"" + std::string(text) + "\"");
  }
  const mpz_class d = parse_integer(den);
  if (d == 0) {
    throw Error(ErrorCode::DivisionByZero,
                "rational literal with zero denominator: \"" + std::string(text) + "\"");
  }
  Rational out;
  out.value_ = mpq_class(parse_integer(num), d);
  out.value_.canonicalize();
  return out;
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) digits = 0;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const mpz_class num = ::abs(value_.get_num()) * scale;
  const mpz_class& den = value_.get_den();
  mpz_class q = num / den;
  const mpz_class rem = num - q * den;
  if (2 * rem >= den) q += 1;

  std::string body = q.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), 1, '.');
  }
  const bool negative = sgn(value_) < 0 && q != 0;
  return negative ? "-" + body : body;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    return (Rational(1) / *this).pow(-exponent);
  }
  Rational out;
  mpz_pow_ui(out.value_.get_num_mpz_t(), value_.get_num_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(out.value_.get_den_mpz_t(), value_.get_den_mpz_t(),
             static_cast<unsigned long>(exponent));
  return out;
}

Rational Rational::abs() const {
  Rational out;
  out.value_ = ::abs(value_);
  return out;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "division by zero");
  }
  value_ /= rhs.value_;
  return *this;
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational::parse(f.get_str());
}

}  // namespace moncum
