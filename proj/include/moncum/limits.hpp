#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "moncum/rational.hpp"
#include "moncum/sequences.hpp"

namespace moncum {

/// Standard arcsine law (mean 0, variance 1): M_{2m} = (2m-1)!!/m!, odd moments 0.
MomentSequence arcsine_moments(std::size_t order);

/// Monotone Poisson law:
///   M_n = sum_{k=1}^n (lambda^k / k!) sum_{1 = i_0 < ... < i_k = n+1} i_0 i_1 ... i_{k-1}.
MomentSequence monotone_poisson_moments(const Rational& lambda, std::size_t order);

/// (X^(1) + ... + X^(N)) / s with N = s^2 monotone i.i.d. copies of x.
/// Precondition: M_1(x) = 0, M_2(x) = 1, s >= 1.
MomentSequence clt_step(const MomentSequence& x, std::uint64_t s);

struct ConvergenceRow {
  std::uint64_t step = 0;      // s for the CLT, N for the Poisson law
  std::uint64_t summands = 0;  // N (= s^2 for the CLT)
  std::size_t n = 0;           // moment order
  Rational moment;
  Rational target;
  Rational difference;  // moment - target
  /// Monotone cumulant r_n of the sum obeys its exact scaling law:
  /// s^{2-n} r_n(x) for the CLT, N r_n(base) for the Poisson law.
  bool cumulant_scaling_holds = false;
};

struct ConvergenceTable {
  std::string law;  // "clt" or "poisson"
  std::vector<ConvergenceRow> rows;  // sorted by (step, n)
};

ConvergenceTable clt_convergence_table(const MomentSequence& x,
                                       std::span<const std::uint64_t> s_values,
                                       std::span<const std::size_t> orders);

/// Base summand with every moment equal to lambda / N, so N M_k = lambda exactly.
MomentSequence poisson_base(const Rational& lambda, std::uint64_t n_summands,
                            std::size_t order);

ConvergenceTable poisson_convergence_table(const Rational& lambda,
                                           std::span<const std::uint64_t> n_values,
                                           std::span<const std::size_t> orders);

/// Caller-supplied triangular array: one base summand per N. Every base must
/// satisfy the small-numbers hypothesis along the supplied N values: for each
/// k, |N M_k(base_N) - lambda| is non-increasing in N and N M_k > 0.
/// Throws Precondition otherwise.
using PoissonBase = std::pair<std::uint64_t, MomentSequence>;
void validate_poisson_bases(const Rational& lambda, std::span<const PoissonBase> bases,
                            std::size_t order);
ConvergenceTable poisson_convergence_table(const Rational& lambda,
                                           std::span<const PoissonBase> bases,
                                           std::span<const std::size_t> orders);

}  // namespace moncum
