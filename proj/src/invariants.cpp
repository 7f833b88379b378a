#include "weylcoinv/invariants.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "weylcoinv/monomial.hpp"

namespace weylcoinv {

namespace {

Exponent to_exponent(const IntVector& v) {
    Exponent e(v.size());
    for (size_t i = 0; i < v.size(); ++i) e[i] = static_cast<int>(v[i]);
    return e;
}

}  // namespace

Polynomial orbit_polynomial(const WeylGroup& w, const IntVector& weight, Normalization norm) {
    size_t n = weight.size();
    Polynomial out(n);
    if (norm == Normalization::OrbitSum) {
        for (const auto& mu : orbit(w, weight)) out.add_term(to_exponent(mu), Rational(1));
    } else {
        Rational c(1);
        c /= Rational(static_cast<long>(w.size()));
        for (const auto& s : w.elements) out.add_term(to_exponent(int_apply(s, weight)), c);
    }
    return out;
}

Polynomial reynolds_additive(const WeylGroup& w, const Polynomial& f) {
    Polynomial total(f.arity());
    for (const auto& s : w.elements) total = total + f.act_additive(s);
    return total / Rational(static_cast<long>(w.size()));
}

Polynomial reynolds_multiplicative(const WeylGroup& w, const Polynomial& f) {
    Polynomial total(f.arity());
    for (const auto& s : w.elements) total = total + f.act_multiplicative(s);
    return total / Rational(static_cast<long>(w.size()));
}

std::vector<int> additive_invariant_degrees(Family family, int rank) {
    std::vector<int> deg;
    switch (family) {
        case Family::A:
            for (int d = 2; d <= rank + 1; ++d) deg.push_back(d);
            return deg;
        case Family::B:
        case Family::C:
            for (int d = 2; d <= 2 * rank; d += 2) deg.push_back(d);
            return deg;
        case Family::D:
            for (int d = 2; d <= 2 * (rank - 1); d += 2) deg.push_back(d);
            deg.push_back(rank);
            return deg;
        case Family::G:
            return {2, 6};
        case Family::Custom:
            throw std::domain_error("no degree table for custom root systems");
    }
    throw std::logic_error("additive_invariant_degrees: bad enum");
}

namespace {

// Successive differences X_i - X_{i-1} of the weight coordinates (X_0 = 0),
// plus the closing difference -X_n for family A. Simple reflections permute
// these (family A) or permute them with sign changes (family C), so their
// power sums of the listed degrees are invariant.
std::vector<Polynomial> difference_coordinates(const RootSystem& rs) {
    int n = rs.rank;
    std::vector<Polynomial> nu;
    nu.push_back(Polynomial::variable(n, 0));
    for (int i = 1; i < n; ++i)
        nu.push_back(Polynomial::variable(n, i) - Polynomial::variable(n, i - 1));
    if (rs.family == Family::A)
        nu.push_back(Polynomial::constant(n, Rational(-1)) * Polynomial::variable(n, n - 1));
    return nu;
}

}  // namespace

std::vector<Polynomial> additive_fundamental_invariants(const RootSystem& rs) {
    if (rs.family != Family::A && rs.family != Family::C)
        throw std::domain_error("fundamental invariants implemented for families A and C only");
    std::vector<Polynomial> nu = difference_coordinates(rs);
    std::vector<Polynomial> out;
    for (int d : additive_invariant_degrees(rs.family, rs.rank)) {
        Polynomial q(rs.rank);
        for (const auto& y : nu) q = q + y.pow(d);
        out.push_back(std::move(q));
    }
    return out;
}

std::vector<Polynomial> multiplicative_fundamental_invariants(const RootSystem& rs,
                                                              const WeylGroup& w,
                                                              Normalization norm) {
    std::vector<Polynomial> out;
    for (int i = 0; i < rs.rank; ++i) {
        IntVector e(rs.rank, 0);
        e[i] = 1;
        out.push_back(orbit_polynomial(w, e, norm));
    }
    return out;
}

Polynomial weyl_denominator(const RootSystem& rs, const WeylGroup& w) {
    IntVector delta(rs.rank, 1);
    Polynomial out(rs.rank);
    for (const auto& s : w.elements)
        out.add_term(to_exponent(int_apply(s, delta)), Rational(int_det(s)));
    return out;
}

namespace {

Polynomial poly_det(std::vector<std::vector<Polynomial>> m, size_t arity) {
    size_t n = m.size();
    if (n == 0) return Polynomial::constant(arity, Rational(1));
    if (n == 1) return m[0][0];
    Polynomial det(arity);
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Polynomial>> minor;
        minor.reserve(n - 1);
        for (size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            row.reserve(n - 1);
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][j] * poly_det(std::move(minor), arity);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

}  // namespace

Polynomial jacobian_determinant_additive(const RootSystem& rs) {
    std::vector<Polynomial> inv = additive_fundamental_invariants(rs);
    size_t n = inv.size();
    std::vector<std::vector<Polynomial>> m(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i].push_back(inv[i].partial_derive(j));
    return poly_det(std::move(m), rs.rank);
}

Polynomial jacobian_determinant_multiplicative(const std::vector<Polynomial>& invariants) {
    size_t n = invariants.size();
    if (n == 0) throw std::invalid_argument("empty invariant list");
    size_t arity = invariants[0].arity();
    std::vector<std::vector<Polynomial>> m(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i].push_back(invariants[j].euler_derive(i));
    return poly_det(std::move(m), arity);
}

namespace {

// Incrementally maintained reduced echelon basis of a span of polynomials,
// pivoting on grevlex-leading monomials. The final basis is the unique
// reduced echelon basis of the span, independent of insertion order.
class SpanBasis {
  public:
    explicit SpanBasis(size_t arity) : ord_(MonomialOrder::natural(OrderKind::Grevlex, arity)) {}

    // Reduces p against the basis; if independent, stores the reduced monic
    // form (returned) and eliminates its pivot from the other elements.
    const Polynomial* insert(Polynomial p) {
        for (const auto& b : elems_) {
            Rational c = p.coeff(b.leading_exponent(ord_));
            if (c != 0) p = p - b * c;
        }
        if (p.is_zero()) return nullptr;
        p = p / p.leading_coeff(ord_);
        Exponent pivot = p.leading_exponent(ord_);
        for (auto& b : elems_) {
            Rational c = b.coeff(pivot);
            if (c != 0) b = b - p * c;
        }
        elems_.push_back(std::move(p));
        return &elems_.back();
    }

    std::vector<Polynomial> sorted_basis() const {
        std::vector<Polynomial> out(elems_.begin(), elems_.end());
        std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
            return ord_.compare(a.leading_exponent(ord_), b.leading_exponent(ord_)) > 0;
        });
        return out;
    }

  private:
    MonomialOrder ord_;
    std::deque<Polynomial> elems_;  // deque: insert() hands out stable pointers
};

std::vector<Polynomial> derivation_closure(const Polynomial& seed, size_t n_derivations,
                                           bool multiplicative) {
    SpanBasis span(seed.arity());
    std::deque<Polynomial> work{seed};
    while (!work.empty()) {
        Polynomial f = std::move(work.front());
        work.pop_front();
        if (f.is_zero()) continue;
        const Polynomial* stored = span.insert(std::move(f));
        if (!stored) continue;
        for (size_t i = 0; i < n_derivations; ++i)
            work.push_back(multiplicative ? stored->euler_derive(i) : stored->partial_derive(i));
    }
    return span.sorted_basis();
}

}  // namespace

std::vector<Polynomial> harmonic_space_additive(const RootSystem& rs) {
    return derivation_closure(jacobian_determinant_additive(rs), rs.rank, false);
}

std::vector<Polynomial> harmonic_space_multiplicative(const RootSystem& rs, const WeylGroup& w) {
    return derivation_closure(weyl_denominator(rs, w), rs.rank, true);
}

bool is_invariant_additive(const WeylGroup& w, const Polynomial& f) {
    for (const auto& s : w.elements)
        if (!(f.act_additive(s) == f)) return false;
    return true;
}

bool is_invariant_multiplicative(const WeylGroup& w, const Polynomial& f) {
    for (const auto& s : w.elements)
        if (!(f.act_multiplicative(s) == f)) return false;
    return true;
}

}  // namespace weylcoinv
