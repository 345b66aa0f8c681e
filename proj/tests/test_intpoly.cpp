#include <doctest.h>

#include <random>

#include "ancensus/intpoly.hpp"
#include "oracles.hpp"

using namespace ancensus;

namespace {
IntPoly P(std::initializer_list<long> coeffs_low_first) { return IntPoly(coeffs_low_first); }
}

TEST_CASE("ring operations") {
    const IntPoly f = P({-7, -21, 0, 1});  // t^3 - 21t - 7
    CHECK(f.eval(Int(5)) == 13);
    CHECK(P({0, -3, 0, 1}).derivative() == P({-3, 0, 3}));

    const IntPoly p = P({108, 0, -27});  // 108 - 27y^2
    CHECK(p.content() == 27);
    CHECK(p.primitive_part() == P({4, 0, -1}));

    // Shift is exact: f(t + k) evaluated at x equals f(x + k).
    const IntPoly shifted = f.shift(Int(3));
    CHECK(shifted.eval(Int(2)) == f.eval(Int(5)));
}

TEST_CASE("resultant golden values") {
    CHECK(resultant(P({-2, 1}), P({-5, 1})) == -3);
    CHECK(resultant(P({1, 0, 1}), P({-1, 0, 1})) == 4);
    // Constant case: Res(f, c) = c^{deg f}.
    CHECK(resultant(P({1, 0, 0, 1}), P({2})) == 8);
}

TEST_CASE("resultant against Sylvester determinant oracle") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const IntPoly f = test_oracles::random_poly(rng, 2 + trial % 4, 9);
        const IntPoly g = test_oracles::random_poly(rng, 1 + trial % 3, 9);
        CHECK(resultant(f, g) == test_oracles::sylvester_resultant(f, g));
        // Antisymmetry up to the degree-product sign.
        const Int sign = (f.degree() * g.degree()) % 2 == 0 ? 1 : -1;
        CHECK(resultant(f, g) == sign * resultant(g, f));
    }
}

TEST_CASE("discriminant golden values") {
    CHECK(discriminant(P({-1, 0, 1})) == 4);
    CHECK(discriminant(P({-1, -1, 0, 1})) == -23);
    CHECK(discriminant(P({-7, -21, 0, 1})) == 35721);
    CHECK(*is_square_int(Int(35721)) == 189);
    CHECK_THROWS_AS(discriminant(P({1, 1})), std::domain_error);
}

TEST_CASE("discriminant is translation invariant") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const IntPoly f = test_oracles::random_poly(rng, 2 + trial % 5, 12);
        CHECK(discriminant(f.shift(Int(trial % 7 - 3))) == discriminant(f));
    }
}

TEST_CASE("square-free decomposition") {
    // y^4 - 2y^3 + y^2 = (y^2 - y)^2: one multiplicity-2 part.
    const SquareFreeDecomp d1 = squarefree_decomposition(P({0, 0, 1, -2, 1}));
    CHECK(d1.content == 1);
    REQUIRE(d1.factors.size() == 1);
    CHECK(d1.factors[0].first == P({0, -1, 1}));
    CHECK(d1.factors[0].second == 2);

    const SquareFreeDecomp d2 = squarefree_decomposition(P({108, 0, -27}));
    CHECK(d2.content == 27);
    REQUIRE(d2.factors.size() == 1);
    CHECK(d2.factors[0].first == P({4, 0, -1}));
    CHECK(d2.factors[0].second == 1);

    const SquareFreeDecomp d3 = squarefree_decomposition(P({0, 0, 0, 0, 3125}));
    CHECK(d3.content == 3125);
    REQUIRE(d3.factors.size() == 1);
    CHECK(d3.factors[0].first == P({0, 1}));
    CHECK(d3.factors[0].second == 4);

    CHECK_THROWS_AS(squarefree_decomposition(IntPoly()), std::domain_error);
}

TEST_CASE("square-free reconstruction on random inputs") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        IntPoly f = test_oracles::random_poly(rng, 1 + trial % 3, 6);
        const IntPoly g = test_oracles::random_poly(rng, 1 + trial % 2, 6);
        f = f * f * g;  // force a square factor
        const SquareFreeDecomp d = squarefree_decomposition(f);
        IntPoly rebuilt = IntPoly::constant(d.content);
        for (const auto& [factor, mult] : d.factors)
            for (int i = 0; i < mult; ++i) rebuilt = rebuilt * factor;
        CHECK(rebuilt == f);
    }
}

TEST_CASE("constant times square detection") {
    const auto r1 = constant_times_square(P({0, 0, -27}));
    REQUIRE(r1.has_value());
    CHECK(r1->first == -27);
    CHECK(r1->second == P({0, 1}));

    const auto r2 = constant_times_square(P({0, 0, 0, 0, 3125}));
    REQUIRE(r2.has_value());
    CHECK(r2->first == 3125);
    CHECK(r2->second == P({0, 0, 1}));

    CHECK_FALSE(constant_times_square(P({108, 0, -27})).has_value());
}

TEST_CASE("integer square detection") {
    CHECK(*is_square_int(Int(49)) == 7);
    CHECK(*is_square_int(Int(0)) == 0);
    CHECK_FALSE(is_square_int(Int(-4)).has_value());
    CHECK_FALSE(is_square_int(Int(35720)).has_value());
}

TEST_CASE("exact division") {
    const IntPoly f = P({-1, 0, 1});  // (t-1)(t+1)
    CHECK(exact_div(f, P({1, 1})) == P({-1, 1}));
    CHECK_THROWS_AS(exact_div(f, P({2, 1})), std::domain_error);
    IntPoly q;
    CHECK(try_exact_div(f, P({-1, 1}), &q));
    CHECK(q == P({1, 1}));
}

TEST_CASE("polynomial gcd") {
    const IntPoly a = P({-1, 0, 1}) * P({3, 1});
    const IntPoly b = P({1, 2, 1}) * P({3, 1});
    const IntPoly g = poly_gcd(a, b);
    CHECK(g == P({3, 1}) * P({1, 1}));
}
