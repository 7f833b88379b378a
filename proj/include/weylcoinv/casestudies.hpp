#pragma once

#include <string>
#include <vector>

#include "weylcoinv/coinvariants.hpp"
#include "weylcoinv/polynomial.hpp"
#include "weylcoinv/reptheory.hpp"
#include "weylcoinv/rootsystem.hpp"

namespace weylcoinv {

// Change of coordinates between the ambient presentation (variables Y_i / y_i
// indexed by the weights nu_i = w_i - w_{i-1} of the defining representation)
// and the weight coordinates (X_i / x_i at the fundamental weights).
//
// Type A on n ambient variables (rank n-1): Y_i -> X_i - X_{i-1} with
// X_0 = X_n = 0; multiplicatively y_i -> x_i x_{i-1}^{-1} with x_0 = x_n = 1.
// Type C on n ambient variables (rank n): same formulas without the top
// constraint. The inverses are X_i -> Y_1 + .. + Y_i and x_i -> y_1 .. y_i.
Polynomial map_A_poly(const Polynomial& f_ambient);        // n vars -> n-1 vars
Polynomial map_A_poly_inverse(const Polynomial& f_weight); // n-1 vars -> n vars
Polynomial map_A_laurent(const Polynomial& f_ambient);
Polynomial map_A_laurent_inverse(const Polynomial& f_weight);
Polynomial map_C_poly(const Polynomial& f_ambient);        // arity preserved
Polynomial map_C_poly_inverse(const Polynomial& f_weight);
Polynomial map_C_laurent(const Polynomial& f_ambient);
Polynomial map_C_laurent_inverse(const Polynomial& f_weight);

// Type C squaring correspondence, applied factorwise on each monomial:
// Y_i^{2k} -> y_i^k + y_i^{-k}, Y_i^{2k-1} -> y_i^k - y_i^{-k}.
Polynomial psi_C(const Polynomial& f_ambient);

// Ambient matrix of a group element: the signed permutation (type C) or
// permutation (type A, size rank+1) describing its action on the nu-weights.
IntMatrix rho_matrix(const RootSystem& rs, const IntMatrix& weight_matrix);

// Elementary symmetric polynomial of degree i in n variables; the
// "y + y^{-1}" flavor substitutes y_j + y_j^{-1} for the j-th variable.
enum class SigmaFlavor { Plain, PlusInverse };
Polynomial elementary_symmetric(int n, int i, SigmaFlavor flavor = SigmaFlavor::Plain);

// Proportionality of the weight-coordinate image of sigma_i against the
// group-averaged fundamental invariant theta_i: type C compares
// Gamma(sigma_i(y + y^{-1})), type A compares the Laurent image of
// sigma_i(y). Returns the exact scalar; throws if not proportional.
Rational sigma_theta_check(Family family, int n_ambient, int i);

// The constant 2n as an explicit combination of Psi-images:
// Psi(sum Y_i^2)^2 - Psi(sum Y_i^4) - 2 Psi(sum_{i<j} Y_i^2 Y_j^2);
// certifies that the Psi-image of the type-C additive Hilbert ideal
// generates the unit ideal. Returns the evaluated constant.
Rational unit_ideal_witness_C(int n);

// Isotypic multiplicities of the permutation representation on the weights
// of the dilated Voronoi cell (types A and C).
std::vector<Rational> voronoi_multiplicities(const RootSystem& rs, const WeylGroup& w,
                                             int dilation);

// One verified claim about a fixture row.
struct TableCheck {
    std::string table;
    std::string row;
    std::string what;
    bool pass = false;
    std::string detail;  // scalar, rank, or failure reason
};

struct TableReport {
    std::vector<TableCheck> checks;
    bool all_pass() const;
    size_t failures() const;
};

// Loads the bundled table fixtures from data_dir and verifies every row:
// isotypic membership (projections fix each row), independence of the
// multiplicative rows modulo the Hilbert ideal (rank |W|), agreement of the
// squaring-correspondence table with psi_C applied to the additive rows, and
// the graded-transfer reproduction of the multiplicative rows.
TableReport verify_tables(const std::string& data_dir);

}  // namespace weylcoinv
