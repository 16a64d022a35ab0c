#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "moncum/rational.hpp"

namespace moncum {

enum class SeriesKind {
  /// sum_{k>=0} a_k z^{-(k+1)}, e.g. the Cauchy transform G(z).
  PowerAtInfinity,
  /// z + sum_{k>=0} b_k z^{-k}, e.g. the reciprocal Cauchy transform H(z).
  ReciprocalForm,
};

/// Formal series in 1/z truncated at a fixed order n.
///
/// A PowerAtInfinity series of order n stores a_0..a_n. A ReciprocalForm
/// series of order n stores b_0..b_{n-1}; it carries exactly the information
/// of the order-n PowerAtInfinity series it is the reciprocal of. Binary
/// operations on series of different orders work at the smaller order.
class TruncatedSeries {
 public:
  static TruncatedSeries power_at_infinity(std::vector<Rational> a);
  static TruncatedSeries reciprocal_form(std::vector<Rational> b);
  /// The series z, truncated at `order`.
  static TruncatedSeries identity(std::size_t order);

  SeriesKind kind() const { return kind_; }
  std::size_t order() const { return order_; }
  std::span<const Rational> coefficients() const { return coefficients_; }

  TruncatedSeries truncated(std::size_t order) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  TruncatedSeries(SeriesKind kind, std::vector<Rational> coefficients, std::size_t order)
      : kind_(kind), coefficients_(std::move(coefficients)), order_(order) {}

  SeriesKind kind_;
  std::vector<Rational> coefficients_;
  std::size_t order_;
};

/// Multiplicative inverse. PowerAtInfinity with a_0 = 1 maps to ReciprocalForm
/// (G -> H = 1/G); ReciprocalForm maps back to PowerAtInfinity (H -> G).
/// Throws Precondition when a PowerAtInfinity input has a_0 != 1.
TruncatedSeries series_reciprocal(const TruncatedSeries& s);

/// f(g(z)) for two ReciprocalForm series; InvalidKind otherwise.
TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g);

namespace detail {

// Truncated power series in w = 1/z, coefficient index = power of w.
using WSeries = std::vector<Rational>;

WSeries w_multiply(const WSeries& a, const WSeries& b, std::size_t length);
/// 1/a for a[0] == 1.
WSeries w_inverse_unit(const WSeries& a, std::size_t length);
/// a(u) with u[0] == 0.
WSeries w_compose(const WSeries& a, const WSeries& u, std::size_t length);

}  // namespace detail

}  // namespace moncum
