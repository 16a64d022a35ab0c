#include "moncum/series.hpp"

#include <algorithm>

#include "moncum/error.hpp"

namespace moncum {

namespace detail {

WSeries w_multiply(const WSeries& a, const WSeries& b, std::size_t length) {
  WSeries out(length);
  for (std::size_t i = 0; i < std::min(a.size(), length); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < length; ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

WSeries w_inverse_unit(const WSeries& a, std::size_t length) {
  // b_0 = 1, b_k = -sum_{j=1..k} a_j b_{k-j}
  WSeries b(length);
  if (length == 0) return b;
  b[0] = Rational(1);
  for (std::size_t k = 1; k < length; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k && j < a.size(); ++j) {
      acc += a[j] * b[k - j];
    }
    b[k] = -acc;
  }
  return b;
}

WSeries w_compose(const WSeries& a, const WSeries& u, std::size_t length) {
  // Horner: a_0 + u (a_1 + u (a_2 + ...)); valid because u has no constant term.
  WSeries acc(length);
  for (std::size_t k = std::min(a.size(), length); k-- > 0;) {
    acc = w_multiply(acc, u, length);
    acc[0] += a[k];
  }
  return acc;
}

}  // namespace detail

namespace {

using detail::WSeries;

// H(z) = z * P(w) with P(0) = 1 and P_j = b_{j-1}.
WSeries reciprocal_to_w(const TruncatedSeries& h) {
  WSeries p(h.order() + 1);
  p[0] = Rational(1);
  const auto b = h.coefficients();
  for (std::size_t j = 1; j <= h.order(); ++j) p[j] = b[j - 1];
  return p;
}

TruncatedSeries reciprocal_from_w(const WSeries& p) {
  return TruncatedSeries::reciprocal_form(std::vector<Rational>(p.begin() + 1, p.end()));
}

}  // namespace

TruncatedSeries TruncatedSeries::power_at_infinity(std::vector<Rational> a) {
  if (a.empty()) {
    throw Error(ErrorCode::MalformedInput, "power series needs at least a_0");
  }
  const std::size_t order = a.size() - 1;
  return TruncatedSeries(SeriesKind::PowerAtInfinity, std::move(a), order);
}

TruncatedSeries TruncatedSeries::reciprocal_form(std::vector<Rational> b) {
  const std::size_t order = b.size();
  return TruncatedSeries(SeriesKind::ReciprocalForm, std::move(b), order);
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
  return reciprocal_form(std::vector<Rational>(order));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order >= order_) return *this;
  const std::size_t keep = kind_ == SeriesKind::PowerAtInfinity ? order + 1 : order;
  return TruncatedSeries(kind_,
                         std::vector<Rational>(coefficients_.begin(),
                                               coefficients_.begin() + keep),
                         order);
}

TruncatedSeries series_reciprocal(const TruncatedSeries& s) {
  const std::size_t length = s.order() + 1;
  if (s.kind() == SeriesKind::PowerAtInfinity) {
    // G = w Q(w)  =>  1/G = z / Q(w)
    const auto a = s.coefficients();
    if (a[0] != Rational(1)) {
      throw Error(ErrorCode::Precondition,
                  "leading coefficient must be 1 (M_0 = 1), got " + a[0].to_string());
    }
    return reciprocal_from_w(detail::w_inverse_unit(WSeries(a.begin(), a.end()), length));
  }
  // H = z P(w)  =>  1/H = w / P(w)
  return TruncatedSeries::power_at_infinity(
      detail::w_inverse_unit(reciprocal_to_w(s), length));
}

TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (f.kind() != SeriesKind::ReciprocalForm || g.kind() != SeriesKind::ReciprocalForm) {
    throw Error(ErrorCode::InvalidKind, "composition is defined for reciprocal-form series");
  }
  const std::size_t order = std::min(f.order(), g.order());
  const std::size_t length = order + 1;
  // f(g(z)) = g(z) P_f(1/g(z)) = z P_g(w) P_f(w / P_g(w))
  const WSeries pf = reciprocal_to_w(f.truncated(order));
  const WSeries pg = reciprocal_to_w(g.truncated(order));
  WSeries inner = detail::w_inverse_unit(pg, length);
  inner.insert(inner.begin(), Rational{});
  inner.resize(length);
  const WSeries outer = detail::w_compose(pf, inner, length);
  return reciprocal_from_w(detail::w_multiply(pg, outer, length));
}

}  // namespace moncum
