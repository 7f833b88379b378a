#pragma once

#include <vector>

#include "weylcoinv/polynomial.hpp"
#include "weylcoinv/rootsystem.hpp"

namespace weylcoinv {

enum class Normalization { OrbitSum, GroupAverage };

// Sum of x^{s(weight)} over the orbit (OrbitSum), or the group average
// (1/|W|) sum_{s in W} x^{s(weight)} (GroupAverage). On a single orbit,
// orbit_sum = |orbit| * group_average.
Polynomial orbit_polynomial(const WeylGroup& w, const IntVector& weight,
                            Normalization norm = Normalization::OrbitSum);

// Group averaging operators (exact projections onto invariants).
Polynomial reynolds_additive(const WeylGroup& w, const Polynomial& f);
Polynomial reynolds_multiplicative(const WeylGroup& w, const Polynomial& f);

// Degrees of a fundamental system of invariants of the reflection action:
// 2..n+1 scaled down for A_{n-1} realized on rank n-1 (degrees 2,3,..,rank+1)
// and 2,4,..,2n for C_n / B_n.
std::vector<int> additive_invariant_degrees(Family family, int rank);

// Power-sum fundamental invariants of the additive reflection action in the
// weight coordinates: q_d = sum_i (X_i - X_{i-1})^d over the appropriate
// index range (families A and C; throws std::domain_error otherwise).
std::vector<Polynomial> additive_fundamental_invariants(const RootSystem& rs);

// Multiplicative fundamental invariants: orbit sums of the fundamental
// weights (Laurent polynomials).
std::vector<Polynomial> multiplicative_fundamental_invariants(const RootSystem& rs,
                                                              const WeylGroup& w,
                                                              Normalization norm = Normalization::OrbitSum);

// Weyl denominator sum_{s in W} det(s) x^{s(delta)}, delta = (1,..,1).
Polynomial weyl_denominator(const RootSystem& rs, const WeylGroup& w);

// Jacobian determinant det(d f_i / d X_j) of the additive fundamental
// invariants (polynomial case).
Polynomial jacobian_determinant_additive(const RootSystem& rs);

// det(e_i f_j) for Laurent invariants f_j under the Euler derivations e_i.
Polynomial jacobian_determinant_multiplicative(const std::vector<Polynomial>& invariants);

// Space of harmonics as the closure of a seed polynomial under all partial
// (additive) or Euler (multiplicative) derivations; returned as an
// RREF-reduced basis of the span. For a reflection group the seed
// jacobian/denominator generates a space of dimension |W|.
std::vector<Polynomial> harmonic_space_additive(const RootSystem& rs);
std::vector<Polynomial> harmonic_space_multiplicative(const RootSystem& rs,
                                                      const WeylGroup& w);

// Exact |W|-point check that a polynomial is W-invariant.
bool is_invariant_additive(const WeylGroup& w, const Polynomial& f);
bool is_invariant_multiplicative(const WeylGroup& w, const Polynomial& f);

}  // namespace weylcoinv
