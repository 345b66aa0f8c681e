#include <doctest.h>

#include <random>

#include "ancensus/galois.hpp"
#include "oracles.hpp"

using namespace ancensus;

namespace {
IntPoly P(std::initializer_list<long> coeffs_low_first) { return IntPoly(coeffs_low_first); }
}

TEST_CASE("cycle type basics") {
    CycleType ct{{1, 2}};
    CHECK(ct.n() == 3);
    CHECK_FALSE(ct.even_parity());  // a transposition is odd
    CHECK(CycleType{{3}}.even_parity());
    CHECK(CycleType{{1, 1, 1, 2}}.even_parity() == false);
    CHECK(CycleType{{1, 2, 2}}.even_parity());
}

TEST_CASE("factor patterns mod p") {
    const IntPoly f = P({-1, -1, 0, 1});  // t^3 - t - 1, disc -23
    // mod 2: t^3 + t + 1 is irreducible.
    CHECK(factor_pattern_mod_p(f, 2) == CycleType{{3}});
    // mod 5: t^3 - t - 1 = (t-2)(t^2+2t+3).
    CHECK(factor_pattern_mod_p(f, 5) == CycleType{{1, 2}});
    CHECK_THROWS_AS(factor_pattern_mod_p(f, 23), std::domain_error);  // ramified
    CHECK_THROWS_AS(factor_pattern_mod_p(f, 4), std::domain_error);   // not prime
}

TEST_CASE("irreducibility golden cases") {
    CHECK(is_irreducible_q(P({-1, -1, 0, 1})));
    CHECK(is_irreducible_q(P({-7, -21, 0, 1})));
    CHECK(is_irreducible_q(P({1, 1, 0, 0, 1})));       // t^4 + t + 1
    CHECK_FALSE(is_irreducible_q(P({4, 0, 0, 0, 1})));  // t^4+4 = (t^2-2t+2)(t^2+2t+2)
    CHECK_FALSE(is_irreducible_q(P({-6, 11, -6, 1})));  // split cubic
    CHECK_FALSE(is_irreducible_q(P({0, 1, 0, 1})));     // t(t^2+1)
}

TEST_CASE("irreducibility against numeric factor oracle") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        IntPoly f = test_oracles::random_poly(rng, 3 + trial % 3, 8);
        // Force monic with nonzero disc, as required by the contract.
        std::vector<Int> c = f.coeffs();
        c.back() = 1;
        f = IntPoly(std::move(c));
        if (discriminant(f) == 0 || f.coeff(0) == 0) continue;
        CHECK(is_irreducible_q(f) == !test_oracles::numeric_reducible(f));
    }
}

TEST_CASE("resolvent cubic") {
    CHECK(resolvent_cubic(P({12, 8, 0, 0, 1})) == P({-64, -48, 0, 1}));
    CHECK_THROWS_AS(resolvent_cubic(P({1, 0, 0, 1, 1})), std::domain_error);
}

TEST_CASE("alternating-group certification goldens") {
    auto kind = [](std::initializer_list<long> coeffs) {
        return certify_an(IntPoly(coeffs)).to_string();
    };
    CHECK(kind({-7, -21, 0, 1}) == "CertifiedAn");       // t^3 - 21t - 7
    CHECK(kind({-1, -3, 0, 1}) == "CertifiedAn");        // t^3 - 3t - 1
    CHECK(kind({12, 8, 0, 0, 1}) == "CertifiedAn");      // t^4 + 8t + 12
    CHECK(kind({16, 20, 0, 0, 0, 1}) == "CertifiedAn");  // t^5 + 20t + 16
    CHECK(kind({1, 1, 0, 0, 1}) == "CertifiedNotAn(NonSquareDisc)");
    CHECK(kind({4, 0, 0, 0, 1}) == "CertifiedNotAn(Reducible)");
}

TEST_CASE("certification rejects V4 quartics") {
    // t^4 + 1: square disc, irreducible, Galois group of order 8 intersected
    // with A_4 analysis -> reducible resolvent route.
    const GaloisVerdict v = certify_an(P({1, 0, 0, 0, 1}));
    CHECK(v.kind == GaloisVerdict::Kind::CertifiedNotAn);
}

TEST_CASE("field fingerprint and same-field test") {
    const IntPoly f = P({-7, -21, 0, 1});
    const IntPoly g = f.shift(Int(2));  // same field, different generator
    CHECK(same_field_heuristic(f, g));
    CHECK_FALSE(same_field_heuristic(f, P({-1, -3, 0, 1})));
    const auto fp = field_fingerprint(f, 10);
    CHECK(fp.size() == 10);
    for (const auto& [p, ct] : fp) CHECK(ct.n() == 3);
}

TEST_CASE("prime cache grows consistently") {
    const auto& ps = small_primes(10);
    REQUIRE(ps.size() >= 10);
    CHECK(ps[0] == 2);
    CHECK(ps[9] == 29);
}
