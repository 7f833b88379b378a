#include "weylcoinv/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace weylcoinv {

MonomialOrder MonomialOrder::natural(OrderKind k, int arity) {
    MonomialOrder o;
    o.kind = k;
    o.varseq.resize(arity);
    std::iota(o.varseq.begin(), o.varseq.end(), 0);
    return o;
}

int MonomialOrder::compare(const Exponent& a, const Exponent& b) const {
    if (a.size() != varseq.size() || b.size() != varseq.size())
        throw std::invalid_argument("MonomialOrder::compare: arity mismatch");
    if (kind != OrderKind::Lex) {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db ? -1 : 1;
    }
    if (kind == OrderKind::Grevlex) {
        // Ties broken by the reverse reading: smaller exponent on the least
        // significant variable wins.
        for (size_t i = varseq.size(); i-- > 0;) {
            int v = varseq[i];
            if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
        }
        return 0;
    }
    for (int v : varseq)
        if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    return 0;
}

std::string order_kind_name(OrderKind k) {
    switch (k) {
        case OrderKind::Grevlex: return "grevlex";
        case OrderKind::Lex: return "lex";
        case OrderKind::Deglex: return "deglex";
    }
    throw std::logic_error("order_kind_name: bad enum");
}

OrderKind order_kind_from_name(const std::string& name) {
    if (name == "grevlex") return OrderKind::Grevlex;
    if (name == "lex") return OrderKind::Lex;
    if (name == "deglex") return OrderKind::Deglex;
    throw std::invalid_argument("unknown monomial order: " + name);
}

bool monomial_divides(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) throw std::invalid_argument("monomial_divides: arity mismatch");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponent monomial_lcm(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) throw std::invalid_argument("monomial_lcm: arity mismatch");
    Exponent l(a.size());
    for (size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

bool monomials_coprime(const Exponent& a, const Exponent& b) {
    if (a.size() != b.size()) throw std::invalid_argument("monomials_coprime: arity mismatch");
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

}  // namespace weylcoinv
