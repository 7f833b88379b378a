#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "weylcoinv/invariants.hpp"

using namespace weylcoinv;

namespace {

Polynomial X(int arity, int i) { return Polynomial::variable(arity, i); }

Polynomial laurent(int arity, std::initializer_list<std::pair<Exponent, long>> terms) {
    Polynomial p(arity);
    for (const auto& [e, c] : terms) p.add_term(e, Rational(c));
    return p;
}

}  // namespace

TEST_CASE("orbit polynomials of fundamental weights") {
    RootSystem c2 = build_root_system(Family::C, 2);
    WeylGroup w = generate_weyl_group(c2);

    Polynomial th1 = orbit_polynomial(w, {1, 0});
    CHECK(th1 == laurent(2, {{{1, 0}, 1}, {{-1, 1}, 1}, {{1, -1}, 1}, {{-1, 0}, 1}}));
    Polynomial th2 = orbit_polynomial(w, {0, 1});
    CHECK(th2 == laurent(2, {{{0, 1}, 1}, {{2, -1}, 1}, {{-2, 1}, 1}, {{0, -1}, 1}}));

    // Group average = orbit sum / |orbit| (stabilizers collapse).
    Polynomial avg = orbit_polynomial(w, {1, 0}, Normalization::GroupAverage);
    CHECK(avg == th1 * Rational(1, 4));

    RootSystem a2 = build_root_system(Family::A, 2);
    WeylGroup wa = generate_weyl_group(a2);
    CHECK(orbit_polynomial(wa, {1, 0}) ==
          laurent(2, {{{1, 0}, 1}, {{-1, 1}, 1}, {{0, -1}, 1}}));
    CHECK(orbit_polynomial(wa, {0, 1}) ==
          laurent(2, {{{0, 1}, 1}, {{1, -1}, 1}, {{-1, 0}, 1}}));
}

TEST_CASE("reynolds operators project onto invariants") {
    RootSystem a2 = build_root_system(Family::A, 2);
    WeylGroup w = generate_weyl_group(a2);

    Polynomial f = X(2, 0).pow(2);
    Polynomial rf = reynolds_additive(w, f);
    CHECK(is_invariant_additive(w, rf));
    CHECK(reynolds_additive(w, rf) == rf);  // idempotent

    Polynomial g = Polynomial::monomial({1, 0}, 1);
    Polynomial rg = reynolds_multiplicative(w, g);
    CHECK(is_invariant_multiplicative(w, rg));
    CHECK(rg == orbit_polynomial(w, {1, 0}, Normalization::GroupAverage));
}

TEST_CASE("additive invariant degrees") {
    CHECK(additive_invariant_degrees(Family::A, 2) == std::vector<int>{2, 3});
    CHECK(additive_invariant_degrees(Family::A, 3) == std::vector<int>{2, 3, 4});
    CHECK(additive_invariant_degrees(Family::C, 2) == std::vector<int>{2, 4});
    CHECK(additive_invariant_degrees(Family::C, 3) == std::vector<int>{2, 4, 6});
}

TEST_CASE("additive fundamental invariants are invariant") {
    RootSystem c2 = build_root_system(Family::C, 2);
    auto inv = additive_fundamental_invariants(c2);
    REQUIRE(inv.size() == 2);
    // q_2 = Y1^2 + Y2^2 with Y1 = X1, Y2 = X2 - X1.
    CHECK(inv[0] == X(2, 0).pow(2) * Rational(2) - X(2, 0) * X(2, 1) * Rational(2) + X(2, 1).pow(2));
    CHECK(inv[1].degree() == 4);

    WeylGroup w = generate_weyl_group(c2);
    for (const auto& q : inv) CHECK(is_invariant_additive(w, q));

    for (auto [fam, rank] : {std::pair{Family::A, 2}, {Family::A, 3}, {Family::C, 3}}) {
        RootSystem rs = build_root_system(fam, rank);
        WeylGroup wg = generate_weyl_group(rs);
        auto qs = additive_fundamental_invariants(rs);
        CHECK(qs.size() == static_cast<size_t>(rank));
        for (size_t i = 0; i < qs.size(); ++i) {
            CHECK(qs[i].degree() == additive_invariant_degrees(fam, rank)[i]);
            CHECK(qs[i].is_homogeneous());
            CHECK(is_invariant_additive(wg, qs[i]));
        }
    }

    RootSystem g2 = build_root_system(Family::G, 2);
    CHECK_THROWS_AS(additive_fundamental_invariants(g2), std::domain_error);
}

TEST_CASE("multiplicative fundamental invariants") {
    RootSystem a2 = build_root_system(Family::A, 2);
    WeylGroup w = generate_weyl_group(a2);
    auto th = multiplicative_fundamental_invariants(a2, w);
    REQUIRE(th.size() == 2);
    CHECK(th[0] == orbit_polynomial(w, {1, 0}));
    CHECK(th[1] == orbit_polynomial(w, {0, 1}));
    for (const auto& t : th) CHECK(is_invariant_multiplicative(w, t));

    auto avg = multiplicative_fundamental_invariants(a2, w, Normalization::GroupAverage);
    CHECK(avg[0] == th[0] * Rational(1, 3));
}

TEST_CASE("weyl denominator is alternating") {
    RootSystem a1 = build_root_system(Family::A, 1);
    WeylGroup w1 = generate_weyl_group(a1);
    CHECK(weyl_denominator(a1, w1) == laurent(1, {{{1}, 1}, {{-1}, -1}}));

    for (auto [fam, rank] : {std::pair{Family::A, 2}, {Family::C, 2}}) {
        RootSystem rs = build_root_system(fam, rank);
        WeylGroup w = generate_weyl_group(rs);
        Polynomial d = weyl_denominator(rs, w);
        CHECK(d.term_count() == w.size());  // delta is regular
        for (const auto& s : w.elements) {
            Rational det(int_det(s));
            CHECK(d.act_multiplicative(s) == d * det);
        }
    }
}

TEST_CASE("additive jacobian determinant is the product of the roots up to scalar") {
    // deg = number of positive roots; skew under every generator.
    for (auto [fam, rank, nroots] :
         {std::tuple{Family::A, 2, 3}, {Family::C, 2, 4}, {Family::A, 3, 6}}) {
        RootSystem rs = build_root_system(fam, rank);
        Polynomial j = jacobian_determinant_additive(rs);
        CHECK_FALSE(j.is_zero());
        CHECK(j.is_homogeneous());
        CHECK(j.degree() == nroots);
        for (const auto& s : rs.generators) CHECK(j.act_additive(s) == -j);
    }
}

TEST_CASE("multiplicative jacobian is proportional to the weyl denominator") {
    for (auto [fam, rank] : {std::pair{Family::A, 1}, {Family::A, 2}, {Family::C, 2}}) {
        RootSystem rs = build_root_system(fam, rank);
        WeylGroup w = generate_weyl_group(rs);
        Polynomial jac =
            jacobian_determinant_multiplicative(multiplicative_fundamental_invariants(rs, w));
        auto c = proportionality_scalar(jac, weyl_denominator(rs, w));
        REQUIRE(c.has_value());
        CHECK(*c != 0);
    }
}

TEST_CASE("harmonic spaces have dimension |W|") {
    for (auto [fam, rank, order] :
         {std::tuple{Family::A, 1, 2}, {Family::A, 2, 6}, {Family::C, 2, 8}}) {
        RootSystem rs = build_root_system(fam, rank);
        WeylGroup w = generate_weyl_group(rs);
        auto ha = harmonic_space_additive(rs);
        CHECK(ha.size() == static_cast<size_t>(order));
        for (const auto& h : ha) CHECK(h.is_homogeneous());
        auto hm = harmonic_space_multiplicative(rs, w);
        CHECK(hm.size() == static_cast<size_t>(order));
    }
}

TEST_CASE("invariance tests reject non-invariants") {
    RootSystem a2 = build_root_system(Family::A, 2);
    WeylGroup w = generate_weyl_group(a2);
    CHECK_FALSE(is_invariant_additive(w, X(2, 0)));
    CHECK_FALSE(is_invariant_multiplicative(w, Polynomial::monomial({1, 0}, 1)));
    CHECK(is_invariant_additive(w, Polynomial::constant(2, 7)));
    CHECK(is_invariant_multiplicative(w, Polynomial::constant(2, 7)));
}
