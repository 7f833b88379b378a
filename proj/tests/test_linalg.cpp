#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "weylcoinv/linalg.hpp"

using namespace weylcoinv;

TEST_CASE("integer matrix basics") {
    IntMatrix id = int_identity(3);
    CHECK(id[0] == IntVector{1, 0, 0});
    CHECK(id[2] == IntVector{0, 0, 1});

    IntMatrix swap01{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
    CHECK(int_mul(swap01, swap01) == id);
    CHECK(int_apply(swap01, IntVector{5, -2, 7}) == IntVector{-2, 5, 7});
}

TEST_CASE("integer determinant and inverse") {
    CHECK(int_det({{2}}) == 2);
    CHECK(int_det({{0, 1}, {1, 0}}) == -1);
    CHECK(int_det({{2, -1}, {-2, 2}}) == 2);
    CHECK(int_det({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);

    IntMatrix u{{1, 3}, {0, -1}};  // det = -1
    IntMatrix v = int_inverse(u);
    CHECK(int_mul(u, v) == int_identity(2));
    CHECK(int_mul(v, u) == int_identity(2));
}

TEST_CASE("rational matrix arithmetic") {
    QMatrix m{{Rational(1), Rational(1, 2)}, {Rational(0), Rational(3)}};
    CHECK(q_det(m) == Rational(3));
    CHECK(q_trace(m) == Rational(4));

    QMatrix inv = q_inverse(m);
    CHECK(q_mul(m, inv) == q_identity(2));
    CHECK(q_mul(inv, m) == q_identity(2));

    CHECK(q_apply(m, QVector{Rational(2), Rational(4)}) == QVector{Rational(4), Rational(12)});
    CHECK(q_transpose(m)[0][1] == Rational(0));
    CHECK(q_transpose(m)[1][0] == Rational(1, 2));

    QMatrix singular{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK(q_det(singular) == Rational(0));
    CHECK_THROWS(q_inverse(singular));
}

TEST_CASE("rref, rank, and row dependencies") {
    QMatrix m{{Rational(1), Rational(2), Rational(3)},
              {Rational(2), Rational(4), Rational(6)},
              {Rational(0), Rational(1), Rational(1)}};
    CHECK(q_rank(m) == 2);

    std::vector<size_t> pivots;
    QMatrix copy = m;
    size_t rank = rref(copy, &pivots);
    CHECK(rank == 2);
    CHECK(pivots == std::vector<size_t>{0, 1});
    // RREF: pivot columns reduced to unit vectors.
    CHECK(copy[0][0] == Rational(1));
    CHECK(copy[1][1] == Rational(1));
    CHECK(copy[0][1] == Rational(0));

    auto dep = row_dependency(m);
    REQUIRE(dep.has_value());
    // lambda^T m = 0, lambda != 0
    bool nonzero = false;
    for (const auto& c : *dep) nonzero = nonzero || c != 0;
    CHECK(nonzero);
    for (size_t j = 0; j < 3; ++j) {
        Rational s(0);
        for (size_t i = 0; i < 3; ++i) s += (*dep)[i] * m[i][j];
        CHECK(s == Rational(0));
    }

    QMatrix indep{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    CHECK_FALSE(row_dependency(indep).has_value());
}

TEST_CASE("positive definiteness") {
    CHECK(is_positive_definite({{Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}}));
    CHECK_FALSE(is_positive_definite({{Rational(1), Rational(2)}, {Rational(2), Rational(1)}}));
    CHECK_FALSE(is_positive_definite({{Rational(0)}}));
    // Symmetrized Cartan of a rank-3 chain is positive definite.
    QMatrix a3{{Rational(2), Rational(-1), Rational(0)},
               {Rational(-1), Rational(2), Rational(-1)},
               {Rational(0), Rational(-1), Rational(2)}};
    CHECK(is_positive_definite(a3));
}
