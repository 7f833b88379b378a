#include "weylcoinv/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace weylcoinv {

namespace {

struct OrderGreater {
    const MonomialOrder* ord;
    bool operator()(const Exponent& a, const Exponent& b) const { return ord->greater(a, b); }
};

// Working representation: terms in a map sorted descending, so begin() is
// the leading term.
using TermMap = std::map<Exponent, Rational, OrderGreater>;

TermMap to_map(const Polynomial& p, const MonomialOrder& ord) {
    TermMap m{OrderGreater{&ord}};
    m.insert(p.terms().begin(), p.terms().end());
    return m;
}

Polynomial to_poly(const TermMap& m, int arity) {
    Polynomial p(arity);
    for (const auto& [e, c] : m) p.add_term(e, c);
    return p;
}

void add_scaled(TermMap& target, const TermMap& src, const Exponent& shift, const Rational& c) {
    Exponent e(shift.size());
    for (const auto& [es, cs] : src) {
        for (size_t i = 0; i < e.size(); ++i) e[i] = es[i] + shift[i];
        auto [it, inserted] = target.emplace(e, cs * c);
        if (!inserted) {
            it->second += cs * c;
            if (it->second == 0) target.erase(it);
        }
    }
}

struct Generator {
    TermMap terms;
    Exponent lt;
    Rational lc;
};

Generator make_generator(TermMap t) {
    Generator g{std::move(t), {}, Rational(0)};
    g.lt = g.terms.begin()->first;
    g.lc = g.terms.begin()->second;
    return g;
}

// Divides f by the basis until no term is reducible; returns the remainder.
TermMap reduce_full(TermMap f, const std::vector<Generator>& basis, const MonomialOrder& ord,
                    const std::vector<bool>* alive = nullptr) {
    TermMap rem{OrderGreater{&ord}};
    while (!f.empty()) {
        const auto& [e, c] = *f.begin();
        const Generator* red = nullptr;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (alive && !(*alive)[k]) continue;
            if (monomial_divides(basis[k].lt, e)) {
                red = &basis[k];
                break;
            }
        }
        if (!red) {
            rem.emplace(e, c);
            f.erase(f.begin());
            continue;
        }
        Exponent shift(e.size());
        for (size_t i = 0; i < e.size(); ++i) shift[i] = e[i] - red->lt[i];
        add_scaled(f, red->terms, shift, -c / red->lc);
    }
    return rem;
}

// Content-normalized copy: integer coprime coefficients, positive leading
// coefficient. Keeps numbers small during completion.
TermMap primitive(const TermMap& f, const MonomialOrder& ord) {
    Polynomial p = to_poly(f, ord.arity());
    Rational c = p.content();
    if (f.begin()->second < 0) c = -c;
    TermMap out{OrderGreater{&ord}};
    for (const auto& [e, v] : f) out.emplace(e, v / c);
    return out;
}

struct Pair {
    Exponent lcm;
    size_t i, j;
};

struct PairLess {
    const MonomialOrder* ord;
    bool operator()(const Pair& a, const Pair& b) const {
        int cmp = ord->compare(a.lcm, b.lcm);
        if (cmp != 0) return cmp < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace

bool GroebnerBasis::contains_one() const {
    for (const auto& g : gens)
        if (g.is_constant() && !g.is_zero()) return true;
    return false;
}

GroebnerBasis buchberger(std::vector<Polynomial> input, const MonomialOrder& order) {
    int arity = order.arity();
    for (const auto& f : input) {
        if (f.arity() != arity) throw std::invalid_argument("buchberger: arity mismatch");
        if (!f.all_exponents_nonnegative())
            throw std::invalid_argument("buchberger: Laurent input; embed first");
    }

    std::vector<Generator> basis;
    for (auto& f : input) {
        if (f.is_zero()) continue;
        basis.push_back(make_generator(primitive(to_map(f, order), order)));
    }

    std::set<Pair, PairLess> queue{PairLess{&order}};
    std::set<std::pair<size_t, size_t>> pending;  // mirrors queue membership
    auto push_pair = [&](size_t i, size_t j) {
        // Coprime leading terms reduce to zero; skip at creation.
        if (monomials_coprime(basis[i].lt, basis[j].lt)) return;
        Pair p{monomial_lcm(basis[i].lt, basis[j].lt), i, j};
        queue.insert(p);
        pending.insert({i, j});
    };
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

    while (!queue.empty()) {
        Pair p = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({p.i, p.j});

        // Chain criterion: a third generator dividing the lcm, whose pairs
        // with both ends are already handled, makes this pair redundant.
        bool redundant = false;
        for (size_t k = 0; k < basis.size() && !redundant; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!monomial_divides(basis[k].lt, p.lcm)) continue;
            auto key = [](size_t a, size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) redundant = true;
        }
        if (redundant) continue;

        const Generator& f = basis[p.i];
        const Generator& g = basis[p.j];
        TermMap s{OrderGreater{&order}};
        Exponent shift_f(arity), shift_g(arity);
        for (int t = 0; t < arity; ++t) {
            shift_f[t] = p.lcm[t] - f.lt[t];
            shift_g[t] = p.lcm[t] - g.lt[t];
        }
        add_scaled(s, f.terms, shift_f, 1 / f.lc);
        add_scaled(s, g.terms, shift_g, Rational(-1) / g.lc);

        TermMap r = reduce_full(std::move(s), basis, order);
        if (r.empty()) continue;
        basis.push_back(make_generator(primitive(r, order)));
        size_t idx = basis.size() - 1;
        for (size_t i = 0; i < idx; ++i) push_pair(i, idx);
    }

    // Minimalize: drop generators whose leading term another one divides.
    std::vector<bool> alive(basis.size(), true);
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size() && alive[i]; ++j) {
            if (i == j || !alive[j]) continue;
            if (monomial_divides(basis[j].lt, basis[i].lt) &&
                !(basis[j].lt == basis[i].lt && j > i))
                alive[i] = false;
        }

    // Interreduce the survivors and normalize monic.
    GroebnerBasis out;
    out.order = order;
    out.arity = arity;
    std::vector<std::pair<Exponent, TermMap>> reduced;
    for (size_t i = 0; i < basis.size(); ++i) {
        if (!alive[i]) continue;
        alive[i] = false;  // reduce against the others only
        TermMap r = reduce_full(basis[i].terms, basis, order, &alive);
        alive[i] = true;
        if (r.empty()) continue;  // duplicate leading term fully absorbed
        Rational lc = r.begin()->second;
        for (auto& [e, c] : r) c /= lc;
        reduced.emplace_back(r.begin()->first, std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const auto& a, const auto& b) { return order.less(a.first, b.first); });
    for (auto& [lt, t] : reduced) out.gens.push_back(to_poly(t, arity));
    return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (f.arity() != gb.arity) throw std::invalid_argument("normal_form: arity mismatch");
    std::vector<Generator> basis;
    basis.reserve(gb.gens.size());
    for (const auto& g : gb.gens) basis.push_back(make_generator(to_map(g, gb.order)));
    return to_poly(reduce_full(to_map(f, gb.order), basis, gb.order), gb.arity);
}

bool verify_groebner(const GroebnerBasis& gb) {
    std::vector<Generator> basis;
    for (const auto& g : gb.gens) {
        if (g.is_zero()) return false;
        basis.push_back(make_generator(to_map(g, gb.order)));
    }
    int arity = gb.arity;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) {
            Exponent lcm = monomial_lcm(basis[i].lt, basis[j].lt);
            TermMap s{OrderGreater{&gb.order}};
            Exponent shift_i(arity), shift_j(arity);
            for (int t = 0; t < arity; ++t) {
                shift_i[t] = lcm[t] - basis[i].lt[t];
                shift_j[t] = lcm[t] - basis[j].lt[t];
            }
            add_scaled(s, basis[i].terms, shift_i, 1 / basis[i].lc);
            add_scaled(s, basis[j].terms, shift_j, Rational(-1) / basis[j].lc);
            if (!reduce_full(std::move(s), basis, gb.order).empty()) return false;
        }
    return true;
}

bool is_zero_dimensional(const GroebnerBasis& gb) {
    if (gb.contains_one()) return false;  // empty variety, but no monomial basis
    for (int v = 0; v < gb.arity; ++v) {
        bool pure = false;
        for (const auto& g : gb.gens) {
            Exponent lt = g.leading_exponent(gb.order);
            bool only_v = lt[v] > 0;
            for (int u = 0; u < gb.arity && only_v; ++u)
                if (u != v && lt[u] != 0) only_v = false;
            if (only_v) {
                pure = true;
                break;
            }
        }
        if (!pure) return false;
    }
    return true;
}

std::vector<Exponent> standard_monomials(const GroebnerBasis& gb) {
    if (!is_zero_dimensional(gb))
        throw std::domain_error("standard_monomials: quotient not finite-dimensional");
    std::vector<Exponent> lts;
    std::vector<int> bound(gb.arity, 0);
    for (const auto& g : gb.gens) {
        Exponent lt = g.leading_exponent(gb.order);
        lts.push_back(lt);
        for (int v = 0; v < gb.arity; ++v) {
            bool only_v = lt[v] > 0;
            for (int u = 0; u < gb.arity && only_v; ++u)
                if (u != v && lt[u] != 0) only_v = false;
            if (only_v && (bound[v] == 0 || lt[v] < bound[v])) bound[v] = lt[v];
        }
    }
    std::vector<Exponent> out;
    Exponent e(gb.arity, 0);
    // Odometer over the box below the pure-power bounds.
    while (true) {
        bool reducible = false;
        for (const auto& lt : lts)
            if (monomial_divides(lt, e)) {
                reducible = true;
                break;
            }
        if (!reducible) out.push_back(e);
        int v = gb.arity - 1;
        while (v >= 0) {
            if (++e[v] < bound[v]) break;
            e[v] = 0;
            --v;
        }
        if (v < 0) break;
    }
    std::sort(out.begin(), out.end(),
              [&](const Exponent& a, const Exponent& b) { return gb.order.less(a, b); });
    return out;
}

MonomialOrder laurent_order(int n) { return MonomialOrder::natural(OrderKind::Grevlex, 2 * n); }

LaurentGB laurent_gb(const std::vector<Polynomial>& laurent_gens) {
    if (laurent_gens.empty()) throw std::invalid_argument("laurent_gb: no generators");
    int n = laurent_gens[0].arity();
    std::vector<Polynomial> emb;
    for (const auto& f : laurent_gens) {
        if (f.arity() != n) throw std::invalid_argument("laurent_gb: arity mismatch");
        emb.push_back(f.embed());
    }
    for (int i = 0; i < n; ++i) {
        Polynomial rel(2 * n);
        Exponent e(2 * n, 0);
        e[i] = 1;
        e[n + i] = 1;
        rel.add_term(e, Rational(1));
        rel.add_term(Exponent(2 * n, 0), Rational(-1));
        emb.push_back(std::move(rel));
    }
    LaurentGB out;
    out.n = n;
    out.gb = buchberger(std::move(emb), laurent_order(n));
    return out;
}

Polynomial laurent_nf(const Polynomial& f, const LaurentGB& lgb) {
    if (f.arity() != lgb.n) throw std::invalid_argument("laurent_nf: arity mismatch");
    return normal_form(f.embed(), lgb.gb).retract();
}

std::vector<Exponent> laurent_standard_monomials(const LaurentGB& lgb) {
    std::vector<Exponent> out;
    for (const Exponent& e : standard_monomials(lgb.gb)) {
        Exponent l(lgb.n);
        for (int i = 0; i < lgb.n; ++i) l[i] = e[i] - e[lgb.n + i];
        out.push_back(std::move(l));
    }
    return out;
}

}  // namespace weylcoinv
