#include <doctest.h>

#include <cmath>

#include "ancensus/pila.hpp"

using namespace ancensus;

namespace {
FiberBase B(int n, std::initializer_list<long> coeffs) {
    std::vector<Int> c;
    for (long v : coeffs) c.emplace_back(v);
    return FiberBase(n, std::move(c));
}
}

TEST_CASE("exponent formulas") {
    const ExponentSet e6 = theorem_exponents(6);
    CHECK(e6.theorem_exp == Rat(17, 10));  // 34/20
    CHECK(e6.schmidt_exp == Rat(2));
    CHECK(e6.log_power == 13);

    const ExponentSet e3 = theorem_exponents(3);
    CHECK(e3.theorem_exp == Rat(7, 8));
    CHECK(e3.pila_fiber_exp == Rat(3, 8));
    CHECK(e3.malle_exp == Rat(1, 2));

    CHECK_THROWS_AS(theorem_exponents(2), std::domain_error);
}

TEST_CASE("exponent gap identity over n = 3..100") {
    for (int n = 3; n <= 100; ++n) {
        const ExponentSet e = theorem_exponents(n);
        Rat gap = e.schmidt_exp - e.theorem_exp;
        gap.canonicalize();
        Rat expected(n, 4 * (n - 1));
        expected.canonicalize();
        CHECK(gap == expected);
        CHECK(e.theorem_exp < e.schmidt_exp);
    }
}

TEST_CASE("point-count bound values") {
    // d=1, B=e: 3^12 * e * (log e)^5 = 531441 e.
    const double v1 = pila_bound_value({1, std::exp(1.0)});
    CHECK(v1 == doctest::Approx(531441.0 * std::exp(1.0)).epsilon(1e-9));
    // d=2, B=100: 6^16 * 100^{1/2} * (log 100)^7.
    const double expected_log =
        16 * std::log10(6.0) + 0.5 * 2.0 + 7 * std::log10(std::log(100.0));
    CHECK(pila_bound_log10({2, 100.0}) == doctest::Approx(expected_log).epsilon(1e-12));
    // Monotone in B.
    CHECK(pila_bound_log10({3, 1000.0}) < pila_bound_log10({3, 2000.0}));
    // Astronomically large constants overflow to +infinity cleanly.
    CHECK(std::isinf(pila_bound_value({40, 10.0})));
    CHECK_THROWS_AS(pila_bound_log10({0, 10.0}), std::domain_error);
    CHECK_THROWS_AS(pila_bound_log10({1, 1.0}), std::domain_error);
}

TEST_CASE("fiber point counts") {
    // n=3, base (-3), X=100, c=1: a_3 = +-1 give disc 81 = 9^2;
    // a_3 = +-2 give disc 0 (singular).
    CHECK(count_fiber_points(B(3, {-3}), 100, BoxConst{1, 1}, false) == 2);
    CHECK(count_fiber_points(B(3, {-3}), 100, BoxConst{1, 1}, true) == 4);
    // n=3, base (0): -27 a_3^2 is negative away from the singular origin.
    CHECK(count_fiber_points(B(3, {0}), 100, BoxConst{1, 1}, false) == 0);
    CHECK(count_fiber_points(B(3, {0}), 100, BoxConst{1, 1}, true) == 1);
    // Monotone in X and c.
    CHECK(count_fiber_points(B(3, {-3}), 10000, BoxConst{1, 1}, false) >=
          count_fiber_points(B(3, {-3}), 100, BoxConst{1, 1}, false));
    CHECK(count_fiber_points(B(3, {-3}), 100, BoxConst{4, 1}, false) >=
          count_fiber_points(B(3, {-3}), 100, BoxConst{1, 1}, false));
}

TEST_CASE("fiber exponent scan") {
    const std::vector<long long> grid{100, 1000, 10000, 100000};
    const FiberScanResult r = fiber_exponent_scan(B(3, {-3}), grid, BoxConst{1, 1});
    CHECK(r.within_pila_bound);
    CHECK(r.slope <= 3.0 / 8.0 + 0.15);
    REQUIRE(r.counts.size() == 4);
    for (size_t i = 1; i < r.counts.size(); ++i)
        CHECK(r.counts[i].second >= r.counts[i - 1].second);

    // Reducible fiber is a precondition violation.
    CHECK_THROWS_AS(fiber_exponent_scan(B(3, {0}), grid, BoxConst{1, 1}), std::domain_error);
    CHECK_THROWS_AS(fiber_exponent_scan(B(3, {-3}), {100, 1000}, BoxConst{1, 1}),
                    std::domain_error);
}
