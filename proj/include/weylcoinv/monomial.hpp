#pragma once

#include <string>
#include <vector>

namespace weylcoinv {

// Exponent vector of a (Laurent) monomial. Entries may be negative.
using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) {
    int d = 0;
    for (int v : e) d += v;
    return d;
}

enum class OrderKind { Grevlex, Lex, Deglex };

// A monomial order together with a significance sequence of variables:
// varseq[0] is the most significant variable. All three kinds are total
// orders; Grevlex and Deglex refine total degree and are well-orders on
// nonnegative exponents.
struct MonomialOrder {
    OrderKind kind = OrderKind::Grevlex;
    std::vector<int> varseq;  // permutation of 0..arity-1

    static MonomialOrder natural(OrderKind k, int arity);

    int arity() const { return static_cast<int>(varseq.size()); }

    // negative if a < b, 0 if equal, positive if a > b
    int compare(const Exponent& a, const Exponent& b) const;
    bool less(const Exponent& a, const Exponent& b) const { return compare(a, b) < 0; }
    bool greater(const Exponent& a, const Exponent& b) const { return compare(a, b) > 0; }
};

std::string order_kind_name(OrderKind k);
OrderKind order_kind_from_name(const std::string& name);

// divides: a_i <= b_i for all i (nonnegative exponents assumed)
bool monomial_divides(const Exponent& a, const Exponent& b);
Exponent monomial_lcm(const Exponent& a, const Exponent& b);
bool monomials_coprime(const Exponent& a, const Exponent& b);

}  // namespace weylcoinv
