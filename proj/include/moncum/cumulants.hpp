#pragma once

#include <cstddef>
#include <vector>

#include "moncum/polynomial.hpp"
#include "moncum/rational.hpp"
#include "moncum/sequences.hpp"

namespace moncum {

/// m_n(t) = M_n(t.X) for n = 0..order: m_0 = 1, every other m_n has zero
/// constant term, m_n(1) = M_n(X), and the t-coefficient of m_n is r_n.
class MomentFlow {
 public:
  explicit MomentFlow(std::vector<Polynomial> polynomials);

  std::size_t order() const { return polynomials_.size() - 1; }
  const Polynomial& operator[](std::size_t n) const { return polynomials_[n]; }
  const std::vector<Polynomial>& polynomials() const { return polynomials_; }

  /// (m_0(t), ..., m_order(t)). formal_only is set for t < 0.
  MomentSequence at(const Rational& t) const;

 private:
  std::vector<Polynomial> polynomials_;
};

// Monotone moment-cumulant formula:
//   M_n = sum_{k=1}^n sum_{1 = i_0 < i_1 < ... < i_k = n+1}
//           (1/k!) prod_{l=1}^k i_{l-1} r_{i_l - i_{l-1}}
// evaluated by dynamic programming over the chain (i_0, ..., i_k).
MomentSequence moments_from_monotone_cumulants(const CumulantSequence& r, std::size_t order);

/// Triangular inversion of the monotone formula; r_n is M_n minus the k >= 2
/// part, which only involves r_1..r_{n-1}.
CumulantSequence monotone_cumulants_from_moments(const MomentSequence& m);

/// r_n as the coefficient of N in the polynomial N -> M_n(N.X), recovered by
/// interpolating the convolution powers N = 0..order.
CumulantSequence monotone_cumulants_via_interpolation(const MomentSequence& m);

/// Partition-sum moment formula for the kind of `r`:
///   Commutative: all partitions, Free: non-crossing, Boolean: interval,
///   Monotone: monotone partitions weighted by 1/|pi|!.
MomentSequence moments_from_partition_sum(const CumulantSequence& r, std::size_t order);

/// Same sums written over linearly ordered partitions with 1/|pi|! weights.
/// InvalidKind for Monotone.
MomentSequence moments_from_ordered_partition_sum(const CumulantSequence& r,
                                                  std::size_t order);

/// Inverse of moments_from_partition_sum for each kind.
CumulantSequence cumulants_from_moments(const MomentSequence& m, IndependenceKind kind);

/// Flow polynomials from the integrated system
///   m_n(t) = sum_{k=1}^n k r_{n-k+1} integral_0^t m_{k-1}(s) ds.
MomentFlow moment_flow(const CumulantSequence& r, std::size_t order);

/// Exact check of m_n(t+s) against the monotone sum expansion of
/// (m(t), m(s)) at every order up to `order`.
bool flow_semigroup_check(const CumulantSequence& r, const Rational& t, const Rational& s,
                          std::size_t order);

}  // namespace moncum
