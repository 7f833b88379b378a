#include "weylcoinv/coinvariants.hpp"

#include <map>
#include <stdexcept>

namespace weylcoinv {

HilbertIdeal build_hilbert_ideal_additive(const RootSystem& rs,
                                          const std::vector<Rational>& shift) {
    std::vector<Polynomial> gens = additive_fundamental_invariants(rs);
    if (!shift.empty()) {
        if (shift.size() != gens.size())
            throw std::invalid_argument("shift size must match the number of invariants");
        for (size_t i = 0; i < gens.size(); ++i)
            gens[i] -= Polynomial::constant(rs.rank, shift[i]);
    }
    HilbertIdeal h;
    h.multiplicative = false;
    h.arity = rs.rank;
    h.generators = gens;
    h.gb = buchberger(gens, MonomialOrder::natural(OrderKind::Grevlex, rs.rank));
    return h;
}

HilbertIdeal build_hilbert_ideal_multiplicative(const RootSystem& rs, const WeylGroup& w,
                                                const std::vector<Rational>& shift) {
    std::vector<Polynomial> gens = multiplicative_fundamental_invariants(rs, w);
    if (!shift.empty()) {
        if (shift.size() != gens.size())
            throw std::invalid_argument("shift size must match the number of invariants");
        for (size_t i = 0; i < gens.size(); ++i)
            gens[i] -= Polynomial::constant(rs.rank, shift[i]);
    }
    HilbertIdeal h;
    h.multiplicative = true;
    h.arity = rs.rank;
    h.generators = gens;
    h.lgb = laurent_gb(gens);
    return h;
}

std::vector<Rational> augmentation_point_shift(const RootSystem& rs, const WeylGroup& w) {
    std::vector<Rational> shift;
    for (int i = 0; i < rs.rank; ++i) {
        IntVector e(rs.rank, 0);
        e[i] = 1;
        shift.push_back(Rational(static_cast<long>(orbit(w, e).size())));
    }
    return shift;
}

Polynomial hilbert_normal_form(const Polynomial& f, const HilbertIdeal& h) {
    return h.multiplicative ? laurent_nf(f, h.lgb) : normal_form(f, h.gb);
}

std::vector<Exponent> coinvariant_normal_set(const HilbertIdeal& h) {
    return h.multiplicative ? laurent_standard_monomials(h.lgb) : standard_monomials(h.gb);
}

QVector coordinates_in_basis(const Polynomial& reduced, const std::vector<Exponent>& basis) {
    std::map<Exponent, size_t> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    QVector coords(basis.size(), Rational(0));
    for (const auto& [e, c] : reduced.terms()) {
        auto it = index.find(e);
        if (it == index.end())
            throw std::domain_error("polynomial support leaves the monomial basis");
        coords[it->second] = c;
    }
    return coords;
}

QuotientSpace quotient_space(const HilbertIdeal& h, const WeylGroup& w) {
    QuotientSpace q;
    q.basis = coinvariant_normal_set(h);
    size_t dim = q.basis.size();
    q.action.reserve(w.size());
    for (const auto& s : w.elements) {
        QMatrix m(dim, QVector(dim, Rational(0)));
        for (size_t j = 0; j < dim; ++j) {
            Polynomial image = Polynomial::monomial(q.basis[j], Rational(1));
            image = h.multiplicative ? image.act_multiplicative(s) : image.act_additive(s);
            QVector col = coordinates_in_basis(hilbert_normal_form(image, h), q.basis);
            for (size_t i = 0; i < dim; ++i) m[i][j] = col[i];
        }
        q.action.push_back(std::move(m));
    }
    return q;
}

std::vector<Rational> quotient_character(const QuotientSpace& q) {
    std::vector<Rational> chi;
    chi.reserve(q.action.size());
    for (const auto& m : q.action) chi.push_back(q_trace(m));
    return chi;
}

bool regular_rep_check(const QuotientSpace& q, const WeylGroup& w) {
    std::vector<Rational> chi = quotient_character(q);
    if (chi.size() != w.size()) return false;
    for (size_t i = 0; i < chi.size(); ++i) {
        Rational expect = i == w.identity_index ? Rational(static_cast<long>(w.size()))
                                                : Rational(0);
        if (chi[i] != expect) return false;
    }
    return true;
}

namespace {

// All products of d generators drawn with repetition from gens, one per
// multiset. Each partial product remembers the index of its last factor so
// later factors never have a smaller index.
std::vector<Polynomial> degree_power_products(const std::vector<Polynomial>& gens, int d) {
    std::vector<Polynomial> out{gens};
    std::vector<size_t> last(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) last[i] = i;
    for (int k = 1; k < d; ++k) {
        std::vector<Polynomial> next;
        std::vector<size_t> next_last;
        for (size_t p = 0; p < out.size(); ++p)
            for (size_t g = last[p]; g < gens.size(); ++g) {
                next.push_back(out[p] * gens[g]);
                next_last.push_back(g);
            }
        out = std::move(next);
        last = std::move(next_last);
    }
    return out;
}

}  // namespace

GroebnerBasis augmentation_power_gb_additive(int n, int d) {
    if (d < 1) throw std::invalid_argument("augmentation power wants d >= 1");
    std::vector<Polynomial> gens;
    for (int i = 0; i < n; ++i) gens.push_back(Polynomial::variable(n, i));
    return buchberger(degree_power_products(gens, d),
                      MonomialOrder::natural(OrderKind::Grevlex, n));
}

LaurentGB augmentation_power_gb_multiplicative(int n, int d) {
    if (d < 1) throw std::invalid_argument("augmentation power wants d >= 1");
    std::vector<Polynomial> gens;
    for (int i = 0; i < n; ++i)
        gens.push_back(Polynomial::constant(n, Rational(1)) - Polynomial::variable(n, i, -1));
    return laurent_gb(degree_power_products(gens, d));
}

const LaurentGB& AugmentationFiltration::power(int d) {
    if (d < 1) throw std::invalid_argument("augmentation power wants d >= 1");
    if (cache_.size() < static_cast<size_t>(d) + 1) cache_.resize(d + 1);
    if (!cache_[d]) cache_[d] = std::make_shared<LaurentGB>(augmentation_power_gb_multiplicative(n_, d));
    return *cache_[d];
}

Polynomial GradedElement::sum() const {
    Polynomial total = parts.empty() ? Polynomial(0) : Polynomial(parts[0].arity());
    for (const auto& p : parts) total += p;
    return total;
}

GradedElement graded_decompose(const Polynomial& f, AugmentationFiltration& filt,
                               int degree_cap) {
    if (f.arity() != filt.arity())
        throw std::invalid_argument("graded_decompose: arity mismatch");
    GradedElement out;
    Polynomial residual = f;
    for (int d = 0; !residual.is_zero(); ++d) {
        if (d > degree_cap)
            throw std::runtime_error("graded decomposition exceeded the degree cap");
        Polynomial part = laurent_nf(residual, filt.power(d + 1));
        out.parts.push_back(part);
        residual -= part;
    }
    if (out.parts.empty()) out.parts.push_back(Polynomial(f.arity()));
    return out;
}

Polynomial phi_d(const Polynomial& h_homogeneous) {
    if (!h_homogeneous.is_homogeneous())
        throw std::invalid_argument("phi_d wants a homogeneous polynomial");
    int n = h_homogeneous.arity();
    std::vector<Polynomial> images;
    for (int i = 0; i < n; ++i)
        images.push_back(Polynomial::constant(n, Rational(1)) - Polynomial::variable(n, i, -1));
    return h_homogeneous.substitute(images);
}

Polynomial transfer_basis_element(const Polynomial& h_additive, AugmentationFiltration& filt) {
    if (h_additive.is_zero()) return Polynomial(filt.arity());
    int d = h_additive.degree();
    return laurent_nf(phi_d(h_additive), filt.power(d + 1));
}

std::vector<Polynomial> transfer_basis(const std::vector<Polynomial>& additive_basis,
                                       AugmentationFiltration& filt) {
    std::vector<Polynomial> out;
    out.reserve(additive_basis.size());
    for (const auto& h : additive_basis) out.push_back(transfer_basis_element(h, filt));
    return out;
}

RankReport transfer_rank_certificate(const std::vector<Polynomial>& transferred,
                                     const HilbertIdeal& h) {
    RankReport rep;
    rep.normal_set = coinvariant_normal_set(h);
    rep.expected = rep.normal_set.size();
    for (const auto& f : transferred)
        rep.coordinates.push_back(
            coordinates_in_basis(hilbert_normal_form(f, h), rep.normal_set));
    QMatrix m = rep.coordinates;
    rep.rank = q_rank(m);
    if (rep.rank < rep.coordinates.size()) rep.dependency = row_dependency(rep.coordinates);
    return rep;
}

}  // namespace weylcoinv
