#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylcoinv/polynomial.hpp"
#include "weylcoinv/rootsystem.hpp"

using namespace weylcoinv;

namespace {
Polynomial X(int i) { return Polynomial::variable(2, i); }
}

TEST_CASE("construction and term access") {
    Polynomial zero(2);
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero.term_count() == 0);

    Polynomial c = Polynomial::constant(2, Rational(5, 3));
    CHECK(c.is_constant());
    CHECK(c.coeff({0, 0}) == Rational(5, 3));

    Polynomial m = Polynomial::monomial({1, -2}, Rational(7));
    CHECK(m.coeff({1, -2}) == Rational(7));
    CHECK(m.coeff({0, 0}) == Rational(0));
    CHECK_FALSE(m.all_exponents_nonnegative());

    CHECK(Polynomial::variable(3, 1, 4).coeff({0, 4, 0}) == Rational(1));
}

TEST_CASE("ring arithmetic") {
    Polynomial a = X(0) + X(1);
    Polynomial b = X(0) - X(1);
    CHECK(a * b == X(0) * X(0) - X(1) * X(1));
    CHECK(a.pow(2) == X(0) * X(0) + X(0) * X(1) * Rational(2) + X(1) * X(1));
    CHECK(a.pow(0) == Polynomial::constant(2, 1));
    CHECK((a - a).is_zero());
    CHECK(-a + a == Polynomial(2));
    CHECK(a * Rational(1, 2) + a * Rational(1, 2) == a);
    CHECK(a / Rational(2) == a * Rational(1, 2));
    // Cancellation drops terms entirely.
    CHECK((a * b + X(1) * X(1)).term_count() == 1);
}

TEST_CASE("degree bookkeeping on Laurent support") {
    Polynomial f = Polynomial::monomial({2, -1}, 1) + Polynomial::monomial({0, 3}, 2);
    CHECK(f.degree() == 3);
    CHECK(f.min_total_degree() == 1);
    CHECK_FALSE(f.is_homogeneous());
    CHECK(f.homogeneous_component(1) == Polynomial::monomial({2, -1}, 1));
    CHECK(f.homogeneous_component(2).is_zero());
    CHECK((X(0) * X(1)).is_homogeneous());
}

TEST_CASE("substitution is a ring homomorphism") {
    Polynomial f = X(0) * X(0) + X(1);
    std::vector<Polynomial> images{X(0) + X(1), X(0) * X(1)};
    Polynomial g = f.substitute(images);
    CHECK(g == (X(0) + X(1)).pow(2) + X(0) * X(1));
    // (f*f)(images) = f(images)^2
    CHECK((f * f).substitute(images) == g * g);
    CHECK_THROWS(Polynomial::monomial({-1, 0}, 1).substitute(images));
}

TEST_CASE("additive action uses the column convention") {
    RootSystem c2 = build_root_system(Family::C, 2);
    const IntMatrix& s1 = c2.generators[0];
    // s1 . X1 = -X1 + X2, s1 . X2 = X2
    CHECK(X(0).act_additive(s1) == -X(0) + X(1));
    CHECK(X(1).act_additive(s1) == X(1));
    const IntMatrix& s2 = c2.generators[1];
    // s2 . X1 = X1, s2 . X2 = 2 X1 - X2
    CHECK(X(0).act_additive(s2) == X(0));
    CHECK(X(1).act_additive(s2) == X(0) * Rational(2) - X(1));

    // Left action: (s1 s2) . f = s1 . (s2 . f)
    Polynomial f = X(0).pow(2) + X(0) * X(1) * Rational(3);
    IntMatrix prod = int_mul(s1, s2);
    CHECK(f.act_additive(prod) == f.act_additive(s2).act_additive(s1));
}

TEST_CASE("multiplicative action moves Laurent exponents") {
    RootSystem c2 = build_root_system(Family::C, 2);
    const IntMatrix& s1 = c2.generators[0];
    // s1 maps weight (1,0) to (-1,1)
    CHECK(Polynomial::monomial({1, 0}, 1).act_multiplicative(s1) ==
          Polynomial::monomial({-1, 1}, 1));
    Polynomial f = Polynomial::monomial({1, -1}, Rational(2, 5)) +
                   Polynomial::monomial({0, 1}, 1);
    IntMatrix prod = int_mul(c2.generators[1], s1);
    CHECK(f.act_multiplicative(prod) ==
          f.act_multiplicative(s1).act_multiplicative(c2.generators[1]));
    // The action permutes terms bijectively.
    CHECK(f.act_multiplicative(s1).term_count() == f.term_count());
}

TEST_CASE("derivations") {
    Polynomial f = X(0).pow(3) * X(1) + X(1).pow(2);
    CHECK(f.partial_derive(0) == X(0).pow(2) * X(1) * Rational(3));
    CHECK(f.partial_derive(1) == X(0).pow(3) + X(1) * Rational(2));
    // Euler derivation also handles negative exponents.
    Polynomial g = Polynomial::monomial({-2, 1}, 1);
    CHECK(g.euler_derive(0) == g * Rational(-2));
    CHECK(g.euler_derive(1) == g);
    CHECK_THROWS(g.partial_derive(0));
}

TEST_CASE("Laurent embedding and retraction") {
    Polynomial f = Polynomial::monomial({1, -2}, Rational(3)) +
                   Polynomial::monomial({0, 1}, Rational(-1, 2));
    Polynomial e = f.embed();
    CHECK(e.arity() == 4);
    CHECK(e.all_exponents_nonnegative());
    CHECK(e.coeff({1, 0, 0, 2}) == Rational(3));
    CHECK(e.retract() == f);
    // retract is a ring map: x_i z_i - 1 |-> 0
    Polynomial rel(4);
    rel.add_term({1, 0, 1, 0}, 1);
    rel.add_term({0, 0, 0, 0}, -1);
    CHECK(rel.retract().is_zero());
}

TEST_CASE("evaluation and content") {
    Polynomial f = X(0) * X(1) * Rational(6) + X(1) * Rational(-9);
    CHECK(f.evaluate({Rational(2), Rational(1)}) == Rational(3));
    CHECK(f.evaluate_at_ones() == Rational(-3));
    CHECK(f.content() == Rational(3));
    CHECK(f.primitive_part() == X(0) * X(1) * Rational(2) + X(1) * Rational(-3));
    Polynomial laurent = Polynomial::monomial({-1, 0}, Rational(1, 2));
    CHECK(laurent.evaluate({Rational(4), Rational(1)}) == Rational(1, 8));
    CHECK(Polynomial(2).content() == Rational(1));
}

TEST_CASE("leading data and string rendering") {
    MonomialOrder ord = MonomialOrder::natural(OrderKind::Grevlex, 2);
    Polynomial f = X(0) * X(1) * Rational(4) + X(1).pow(2) * Rational(-1) + X(0);
    CHECK(f.leading_exponent(ord) == Exponent{1, 1});
    CHECK(f.leading_coeff(ord) == Rational(4));
    auto st = f.sorted_terms(ord);
    REQUIRE(st.size() == 3);
    CHECK(st[0].first == Exponent{1, 1});
    CHECK(st[2].first == Exponent{1, 0});
    CHECK(f.to_string({"a", "b"}) == "4*a*b - b^2 + a");
    CHECK(Polynomial(2).to_string() == "0");
}

TEST_CASE("proportionality detection") {
    Polynomial f = X(0) * Rational(2) - X(1) * Rational(4);
    Polynomial g = X(0) - X(1) * Rational(2);
    auto c = proportionality_scalar(f, g);
    REQUIRE(c.has_value());
    CHECK(*c == Rational(2));
    CHECK_FALSE(proportionality_scalar(f, X(0) + X(1)).has_value());
    CHECK_FALSE(proportionality_scalar(f, Polynomial(2)).has_value());
}
