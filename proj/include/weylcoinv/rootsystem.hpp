#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "weylcoinv/linalg.hpp"
#include "weylcoinv/rational.hpp"

namespace weylcoinv {

enum class Family { A, B, C, D, G, Custom };

std::string family_name(Family f);
Family family_from_name(const std::string& s);

// Crystallographic root system presented in the basis of fundamental
// weights. The Cartan matrix A and symmetrizer d satisfy: A * diag(d)
// symmetric positive definite. Simple reflections act on weight coordinates
// by integer matrices.
struct RootSystem {
    Family family = Family::Custom;
    int rank = 0;
    IntMatrix cartan;            // n x n
    std::vector<Integer> symmetrizer;
    std::vector<IntMatrix> generators;  // s_1..s_n acting on weight coords
    QMatrix coroot_gram;         // G, G[i][j] = A[i][j] / d[i]
    QMatrix weight_gram;         // G^{-1}: Gram matrix of the fundamental weights

    long weyl_order() const;     // |W| for the named families; throws for Custom
};

// Named family constructor (families A, B, C, D, G with their standard
// Cartan matrices and minimal symmetrizers).
RootSystem build_root_system(Family family, int rank);

// Custom constructor from an explicit generalized Cartan matrix; validates
// integrality, diagonal 2, sign pattern, and symmetrizability into a
// positive definite form. Throws std::invalid_argument on failure.
RootSystem build_root_system(const IntMatrix& cartan);

// Weyl group as explicit matrices, closed under multiplication; elements are
// kept in a deterministic sorted order. Throws std::runtime_error if closure
// exceeds element_cap (override via WEYL_COINV_ELEMENT_CAP).
struct WeylGroup {
    std::vector<IntMatrix> elements;  // sorted; elements[index_of_identity] = I
    size_t identity_index = 0;

    size_t size() const { return elements.size(); }
    size_t index_of(const IntMatrix& m) const;  // throws if absent
};

WeylGroup generate_weyl_group(const RootSystem& rs, size_t element_cap = 0);

size_t default_element_cap();

// Orbit of a weight under W, deterministically sorted.
std::vector<IntVector> orbit(const WeylGroup& w, const IntVector& weight);

// <mu, nu> and |mu|^2 in the invariant form with Gram matrix weight_gram.
Rational pairing(const RootSystem& rs, const QVector& mu, const QVector& nu);
Rational norm_sq(const RootSystem& rs, const QVector& mu);

// Weight lattice points of the dilation d * V, where V is the Voronoi cell
// at the origin of the coroot lattice in the invariant form: all weights mu
// with 2 <mu, lambda> <= d <lambda, lambda> for every nonzero coroot lattice
// vector lambda. (<mu, lambda> is the integer dot product of weight
// coordinates with coroot coordinates; <lambda, lambda> uses coroot_gram.)
// Deterministically sorted.
std::vector<IntVector> dilated_voronoi_weights(const RootSystem& rs, int dilation);

}  // namespace weylcoinv
