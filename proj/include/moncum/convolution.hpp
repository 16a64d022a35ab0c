#pragma once

#include <cstdint>

#include "moncum/rational.hpp"
#include "moncum/sequences.hpp"

namespace moncum {

// Binary operations on sequences of different orders cut both inputs to the
// smaller order and set notes().order_truncated on the result.

/// Moments of X + Y for monotone independent X, Y (X first):
///   M_n = sum_{k=0}^n M_k(X) sum_{j_0+...+j_k = n-k} M_{j_0}(Y)...M_{j_k}(Y).
MomentSequence monotone_convolve(const MomentSequence& x, const MomentSequence& y);

/// Same result through H_{x>y} = H_x o H_y on reciprocal Cauchy series.
MomentSequence monotone_convolve_via_transform(const MomentSequence& x,
                                               const MomentSequence& y);

/// Convolution for any kind. Commutative, Free and Boolean add cumulants;
/// Monotone uses monotone_convolve and is not commutative.
MomentSequence convolve(const MomentSequence& x, const MomentSequence& y,
                        IndependenceKind kind);

/// M_n -> c^n M_n.
MomentSequence dilate(const MomentSequence& x, const Rational& c);

/// N-fold monotone convolution power N.X by binary exponentiation; N = 0
/// gives the point mass at 0.
MomentSequence dot_power(const MomentSequence& x, std::uint64_t n);

/// N-fold convolution power for any kind.
MomentSequence dot_power(const MomentSequence& x, std::uint64_t n, IndependenceKind kind);

/// M_n(t.X) from the monotone moment flow. Agrees with dot_power at integer
/// t >= 0; negative t is evaluated formally and flagged formal_only.
MomentSequence fractional_dot(const MomentSequence& x, const Rational& t);

}  // namespace moncum
