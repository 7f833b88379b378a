#pragma once

#include <optional>
#include <vector>

#include "weylcoinv/monomial.hpp"
#include "weylcoinv/polynomial.hpp"

namespace weylcoinv {

// Reduced Groebner basis of an ideal in an ordinary polynomial ring
// (nonnegative exponents). Generators are monic and interreduced.
struct GroebnerBasis {
    MonomialOrder order;
    int arity = 0;
    std::vector<Polynomial> gens;

    bool contains_one() const;
};

// Buchberger with the coprime-lcm and chain criteria; inputs must be
// ordinary polynomials of a common arity.
GroebnerBasis buchberger(std::vector<Polynomial> gens, const MonomialOrder& order);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// Checks the defining property on the stored generators: every S-polynomial
// reduces to zero.
bool verify_groebner(const GroebnerBasis& gb);

// Monomials outside the leading-term ideal. Requires a zero-dimensional
// quotient, detected by a pure power of every variable among the leading
// terms; throws std::domain_error otherwise. Sorted ascending in gb.order.
std::vector<Exponent> standard_monomials(const GroebnerBasis& gb);

bool is_zero_dimensional(const GroebnerBasis& gb);

// Groebner infrastructure for ideals of the Laurent ring, realized in the
// 2n-variable ring with the unit relations x_i z_i - 1 adjoined. Normal
// forms of embedded Laurent polynomials are computed there and retracted.
struct LaurentGB {
    int n = 0;          // Laurent arity; the ambient ring has 2n variables
    GroebnerBasis gb;   // includes the unit relations
};

// Grevlex on the 2n embedded variables with significance
// x_1 > .. > x_n > z_1 > .. > z_n; x_i z_i - 1 has leading term x_i z_i.
MonomialOrder laurent_order(int n);

LaurentGB laurent_gb(const std::vector<Polynomial>& laurent_gens);

// Normal form of a Laurent polynomial modulo the ideal: embed, reduce,
// retract.
Polynomial laurent_nf(const Polynomial& f, const LaurentGB& lgb);

// Standard monomials of the 2n-variable quotient, retracted to Laurent
// monomials of the n-variable ring.
std::vector<Exponent> laurent_standard_monomials(const LaurentGB& lgb);

}  // namespace weylcoinv
