#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylcoinv/monomial.hpp"

using namespace weylcoinv;

TEST_CASE("total degree handles negative exponents") {
    CHECK(total_degree({}) == 0);
    CHECK(total_degree({1, 2, 0}) == 3);
    CHECK(total_degree({-2, 1}) == -1);
}

TEST_CASE("grevlex order") {
    MonomialOrder ord = MonomialOrder::natural(OrderKind::Grevlex, 3);
    CHECK(ord.arity() == 3);
    CHECK(ord.varseq == std::vector<int>{0, 1, 2});

    // Higher total degree wins.
    CHECK(ord.greater({2, 0, 0}, {1, 0, 0}));
    // Equal degree: the monomial with the smaller exponent on the least
    // significant differing variable is greater.
    CHECK(ord.greater({1, 2, 0}, {2, 0, 1}));   // x1 x2^2 > x1^2 x3
    CHECK(ord.greater({0, 2, 1}, {0, 1, 2}));
    CHECK(ord.greater({1, 1, 1}, {0, 2, 1}));   // tie on x3, then x2: 1 < 2
    CHECK(ord.compare({1, 2, 0}, {1, 2, 0}) == 0);
    CHECK(ord.less({2, 0, 1}, {1, 2, 0}));
}

TEST_CASE("deglex differs from grevlex on the classic pair") {
    MonomialOrder deglex = MonomialOrder::natural(OrderKind::Deglex, 3);
    MonomialOrder grevlex = MonomialOrder::natural(OrderKind::Grevlex, 3);
    Exponent a{1, 2, 0};  // x1 x2^2
    Exponent b{2, 0, 1};  // x1^2 x3
    CHECK(deglex.greater(b, a));
    CHECK(grevlex.greater(a, b));
}

TEST_CASE("lex order ignores total degree") {
    MonomialOrder lex = MonomialOrder::natural(OrderKind::Lex, 2);
    CHECK(lex.greater({1, 0}, {0, 7}));
    CHECK(lex.greater({1, 1}, {1, 0}));
    CHECK(lex.less({0, 3}, {0, 4}));
}

TEST_CASE("custom significance sequence") {
    // x2 most significant.
    MonomialOrder ord{OrderKind::Lex, {1, 0}};
    CHECK(ord.greater({0, 1}, {5, 0}));
}

TEST_CASE("order names round-trip") {
    for (OrderKind k : {OrderKind::Grevlex, OrderKind::Lex, OrderKind::Deglex})
        CHECK(order_kind_from_name(order_kind_name(k)) == k);
    CHECK(order_kind_name(OrderKind::Grevlex) == "grevlex");
    CHECK_THROWS(order_kind_from_name("mystery"));
}

TEST_CASE("divisibility, lcm, coprimality") {
    CHECK(monomial_divides({1, 0, 2}, {1, 1, 2}));
    CHECK_FALSE(monomial_divides({2, 0}, {1, 5}));
    CHECK(monomial_lcm({1, 0, 2}, {0, 3, 1}) == Exponent{1, 3, 2});
    CHECK(monomials_coprime({1, 0}, {0, 2}));
    CHECK_FALSE(monomials_coprime({1, 1}, {0, 1}));
}
