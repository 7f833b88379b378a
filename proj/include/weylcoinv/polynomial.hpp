#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylcoinv/linalg.hpp"
#include "weylcoinv/monomial.hpp"
#include "weylcoinv/rational.hpp"

namespace weylcoinv {

// Sparse exact-rational multivariate polynomial. Exponents may be negative,
// so the same type hosts ordinary polynomials (all exponents >= 0) and
// Laurent polynomials. Terms are kept in a deterministic map keyed by
// exponent vector; no zero coefficients are stored.
class Polynomial {
public:
    Polynomial() : arity_(0) {}
    explicit Polynomial(int arity) : arity_(arity) {}

    static Polynomial constant(int arity, const Rational& c);
    static Polynomial monomial(Exponent e, const Rational& c);
    static Polynomial variable(int arity, int i, int power = 1);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    size_t term_count() const { return terms_.size(); }
    const std::map<Exponent, Rational>& terms() const { return terms_; }
    Rational coeff(const Exponent& e) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial operator/(const Rational& c) const;
    bool operator==(const Polynomial& o) const {
        return arity_ == o.arity_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(int k) const;  // k >= 0

    // Max/min total degree over the support; zero polynomial yields -1/+1
    // style sentinels (degree() = -1).
    int degree() const;
    int min_total_degree() const;
    bool all_exponents_nonnegative() const;
    bool is_homogeneous() const;
    Polynomial homogeneous_component(int d) const;

    // Ring homomorphism sending variable i to images[i]; images must share a
    // common arity. Requires all exponents nonnegative.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    // s . X_i = sum_l s[l][i] X_l (column convention); polynomial inputs only.
    Polynomial act_additive(const IntMatrix& s) const;
    // s . x^mu = x^{s(mu)}; works for any Laurent polynomial.
    Polynomial act_multiplicative(const IntMatrix& s) const;

    // Euler derivation: x^e -> e_i x^e.
    Polynomial euler_derive(int i) const;
    // d/dX_i; requires nonnegative exponents.
    Polynomial partial_derive(int i) const;

    // Laurent embedding into 2n variables x_1..x_n, z_1..z_n: each term
    // splits its exponent into positive part (x block) and negative part
    // (z block). retract() is the inverse ring map z_i -> x_i^{-1} defined
    // on all of the 2n-variable ring.
    Polynomial embed() const;
    Polynomial retract() const;

    Rational evaluate(const std::vector<Rational>& point) const;
    Rational evaluate_at_ones() const;

    // Positive rational c such that (1/c) * this has coprime integer
    // coefficients. Zero polynomial has content 1.
    Rational content() const;
    Polynomial primitive_part() const;

    std::vector<std::pair<Exponent, Rational>> sorted_terms(const MonomialOrder& ord) const;
    Exponent leading_exponent(const MonomialOrder& ord) const;
    Rational leading_coeff(const MonomialOrder& ord) const;

    std::string to_string(const std::vector<std::string>& varnames = {}) const;

    // Internal/bulk construction: adds c * x^e, dropping the term if the sum
    // cancels.
    void add_term(const Exponent& e, const Rational& c);

private:
    int arity_;
    std::map<Exponent, Rational> terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

// c with a == c * b (coefficient-wise), if the supports match.
std::optional<Rational> proportionality_scalar(const Polynomial& a, const Polynomial& b);

}  // namespace weylcoinv
