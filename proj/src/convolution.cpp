#include "moncum/convolution.hpp"

#include <algorithm>
#include <utility>

#include "moncum/cumulants.hpp"
#include "moncum/error.hpp"
#include "moncum/series.hpp"

namespace moncum {

namespace {

struct Aligned {
  MomentSequence x;
  MomentSequence y;
  SequenceNotes notes;
};

Aligned align(const MomentSequence& x, const MomentSequence& y) {
  const std::size_t order = std::min(x.order(), y.order());
  SequenceNotes notes;
  notes.order_truncated = x.order() != y.order() || x.notes().order_truncated ||
                          y.notes().order_truncated;
  notes.formal_only = x.notes().formal_only || y.notes().formal_only;
  return {x.truncated(order), y.truncated(order), notes};
}

std::vector<Rational> to_vector(const MomentSequence& m) {
  return {m.values().begin(), m.values().end()};
}

}  // namespace

MomentSequence monotone_convolve(const MomentSequence& x, const MomentSequence& y) {
  const auto [a, b, notes] = align(x, y);
  const std::size_t order = a.order();
  const std::size_t length = order + 1;
  const std::vector<Rational> gy = to_vector(b);

  // power holds (sum_j M_j(Y) w^j)^{k+1}; its w^{n-k} coefficient is the
  // inner sum over j_0 + ... + j_k = n - k.
  std::vector<Rational> m(length);
  std::vector<Rational> power = gy;
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0) power = detail::w_multiply(power, gy, length);
    if (a[k].is_zero()) continue;
    for (std::size_t n = k; n <= order; ++n) m[n] += a[k] * power[n - k];
  }
  return MomentSequence(std::move(m), notes);
}

MomentSequence monotone_convolve_via_transform(const MomentSequence& x,
                                               const MomentSequence& y) {
  const auto [a, b, notes] = align(x, y);
  const TruncatedSeries hx = series_reciprocal(TruncatedSeries::power_at_infinity(to_vector(a)));
  const TruncatedSeries hy = series_reciprocal(TruncatedSeries::power_at_infinity(to_vector(b)));
  const TruncatedSeries g = series_reciprocal(series_compose(hx, hy));
  const auto coeffs = g.coefficients();
  return MomentSequence(std::vector<Rational>(coeffs.begin(), coeffs.end()), notes);
}

MomentSequence convolve(const MomentSequence& x, const MomentSequence& y,
                        IndependenceKind kind) {
  if (kind == IndependenceKind::Monotone) return monotone_convolve(x, y);
  const auto [a, b, notes] = align(x, y);
  if (a.order() == 0) return MomentSequence({Rational(1)}, notes);
  const CumulantSequence ra = cumulants_from_moments(a, kind);
  const CumulantSequence rb = cumulants_from_moments(b, kind);
  std::vector<Rational> sum(ra.order());
  for (std::size_t n = 1; n <= ra.order(); ++n) sum[n - 1] = ra.value(n) + rb.value(n);
  return moments_from_partition_sum(CumulantSequence(kind, std::move(sum)), a.order())
      .with_notes(notes);
}

MomentSequence dilate(const MomentSequence& x, const Rational& c) {
  std::vector<Rational> m(x.order() + 1);
  Rational scale(1);
  for (std::size_t n = 0; n <= x.order(); ++n) {
    m[n] = x[n] * scale;
    scale *= c;
  }
  return MomentSequence(std::move(m), x.notes());
}

MomentSequence dot_power(const MomentSequence& x, std::uint64_t n) {
  return dot_power(x, n, IndependenceKind::Monotone);
}

MomentSequence dot_power(const MomentSequence& x, std::uint64_t n, IndependenceKind kind) {
  // Every factor is a power of x, so grouping is free even for monotone.
  MomentSequence result = MomentSequence::point_mass(Rational(0), x.order());
  MomentSequence base = x;
  while (n > 0) {
    if (n & 1U) result = convolve(result, base, kind);
    n >>= 1U;
    if (n > 0) base = convolve(base, base, kind);
  }
  return result.with_notes(x.notes());
}

MomentSequence fractional_dot(const MomentSequence& x, const Rational& t) {
  if (x.order() == 0) return MomentSequence({Rational(1)});
  const CumulantSequence r = monotone_cumulants_from_moments(x);
  return moment_flow(r, x.order()).at(t);
}

}  // namespace moncum
