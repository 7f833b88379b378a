#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "weylcoinv/groebner.hpp"
#include "weylcoinv/invariants.hpp"
#include "weylcoinv/polynomial.hpp"
#include "weylcoinv/rootsystem.hpp"

namespace weylcoinv {

// Ideal generated by a fundamental system of invariants, optionally shifted
// by constants (f_i - c_i). Additive: ordinary polynomial ring in the weight
// coordinates. Multiplicative: Laurent ring, ideal of the (shifted) orbit
// sums of the fundamental weights. The quotient has dimension |W| for every
// rational shift.
struct HilbertIdeal {
    bool multiplicative = false;
    int arity = 0;                       // number of weight coordinates
    std::vector<Polynomial> generators;  // the (shifted) invariants
    GroebnerBasis gb;                    // additive case
    LaurentGB lgb;                       // multiplicative case
};

HilbertIdeal build_hilbert_ideal_additive(const RootSystem& rs,
                                          const std::vector<Rational>& shift = {});
HilbertIdeal build_hilbert_ideal_multiplicative(const RootSystem& rs, const WeylGroup& w,
                                                const std::vector<Rational>& shift = {});

// Values theta_i(1,..,1) = |orbit of the i-th fundamental weight|: the shift
// that places the all-ones point on the variety of the shifted ideal.
std::vector<Rational> augmentation_point_shift(const RootSystem& rs, const WeylGroup& w);

Polynomial hilbert_normal_form(const Polynomial& f, const HilbertIdeal& h);

// Standard monomials of the quotient, as exponent vectors in the weight
// coordinates (Laurent exponents in the multiplicative case), sorted
// ascending in the ideal's monomial order.
std::vector<Exponent> coinvariant_normal_set(const HilbertIdeal& h);

// The quotient as an explicit W-module: monomial basis and one action matrix
// per group element (column j = coordinates of the reduced image of basis
// monomial j).
struct QuotientSpace {
    std::vector<Exponent> basis;
    std::vector<QMatrix> action;  // indexed like WeylGroup::elements

    size_t dimension() const { return basis.size(); }
};

QuotientSpace quotient_space(const HilbertIdeal& h, const WeylGroup& w);

// Coordinates of an already reduced polynomial in a monomial basis; throws
// std::domain_error if the support leaves the basis.
QVector coordinates_in_basis(const Polynomial& reduced, const std::vector<Exponent>& basis);

// Trace of each action matrix.
std::vector<Rational> quotient_character(const QuotientSpace& q);

// True iff the character is |W| at the identity and zero elsewhere.
bool regular_rep_check(const QuotientSpace& q, const WeylGroup& w);

// Powers of the augmentation ideals: additive I = (X_1,..,X_n) and
// multiplicative I = (1 - x_1^{-1}, .., 1 - x_n^{-1}). Generators of I^d are
// the degree-d products of the ideal generators.
GroebnerBasis augmentation_power_gb_additive(int n, int d);
LaurentGB augmentation_power_gb_multiplicative(int n, int d);

// Lazily built, cached chain of multiplicative augmentation powers.
class AugmentationFiltration {
public:
    explicit AugmentationFiltration(int n) : n_(n) {}
    int arity() const { return n_; }
    const LaurentGB& power(int d);  // d >= 1

private:
    int n_;
    std::vector<std::shared_ptr<LaurentGB>> cache_;
};

// f = sum_d parts[d] with parts[d] = NF(f - parts[0] - .. - parts[d-1], I^{d+1});
// the iteration stops once the residual vanishes.
struct GradedElement {
    std::vector<Polynomial> parts;  // parts[d] may be zero
    int top_degree() const { return static_cast<int>(parts.size()) - 1; }
    Polynomial sum() const;
};

GradedElement graded_decompose(const Polynomial& f, AugmentationFiltration& filt,
                               int degree_cap = 64);

// Substitution X_i -> 1 - x_i^{-1} of a homogeneous degree-d polynomial: a
// Laurent representative of the degree-d graded class. Throws on
// non-homogeneous input.
Polynomial phi_d(const Polynomial& h_homogeneous);

// Graded transfer of one additive basis element of degree d:
// NF(phi_d(H), I^{d+1}).
Polynomial transfer_basis_element(const Polynomial& h_additive, AugmentationFiltration& filt);

std::vector<Polynomial> transfer_basis(const std::vector<Polynomial>& additive_basis,
                                       AugmentationFiltration& filt);

// Rank certificate for residues modulo a zero-dimensional (Hilbert) ideal:
// coordinates over the normal set, exact rank, and an explicit dependency
// vector whenever the rank is deficient.
struct RankReport {
    size_t rank = 0;
    size_t expected = 0;
    std::vector<Exponent> normal_set;
    std::vector<QVector> coordinates;
    std::optional<QVector> dependency;  // lambda with lambda^T coordinates = 0
    bool full_rank() const { return rank == expected; }
};

RankReport transfer_rank_certificate(const std::vector<Polynomial>& transferred,
                                     const HilbertIdeal& h);

}  // namespace weylcoinv
