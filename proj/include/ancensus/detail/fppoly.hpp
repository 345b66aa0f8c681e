#ifndef ANCENSUS_DETAIL_FPPOLY_HPP
#define ANCENSUS_DETAIL_FPPOLY_HPP

#include <cstdint>
#include <vector>

#include "ancensus/intpoly.hpp"

namespace ancensus::detail {

// Dense polynomial over F_p, lowest degree first, coefficients in [0, p).
// p is a prime below 2^31 so products fit in uint64_t.
using FpPoly = std::vector<std::uint64_t>;

inline void fp_strip(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline FpPoly fp_reduce(const IntPoly& f, std::uint64_t p) {
    FpPoly a(static_cast<size_t>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i) {
        Int r = f.coeff(i) % static_cast<long>(p);
        long v = r.get_si();
        if (v < 0) v += static_cast<long>(p);
        a[static_cast<size_t>(i)] = static_cast<std::uint64_t>(v);
    }
    fp_strip(a);
    return a;
}

inline FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    fp_strip(c);
    return c;
}

inline std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
    long long t = 0, nt = 1, r = static_cast<long long>(p), nr = static_cast<long long>(a % p);
    while (nr != 0) {
        const long long q = r / nr;
        const long long t2 = t - q * nt;
        t = nt;
        nt = t2;
        const long long r2 = r - q * nr;
        r = nr;
        nr = r2;
    }
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

inline FpPoly fp_mod(FpPoly a, const FpPoly& b, std::uint64_t p) {
    const std::uint64_t binv = fp_inv(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t c = (a.back() * binv) % p;
        const size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) {
            const std::uint64_t sub = (c * b[i]) % p;
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        fp_strip(a);
        if (a.empty()) break;
    }
    return a;
}

inline FpPoly fp_divexact(FpPoly a, const FpPoly& b, std::uint64_t p) {
    const std::uint64_t binv = fp_inv(b.back(), p);
    FpPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (a.size() >= b.size()) {
        const std::uint64_t c = (a.back() * binv) % p;
        const size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) {
            const std::uint64_t sub = (c * b[i]) % p;
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
        fp_strip(a);
        if (a.empty()) break;
    }
    fp_strip(q);
    return q;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        const std::uint64_t inv = fp_inv(a.back(), p);
        for (auto& c : a) c = (c * inv) % p;
    }
    return a;
}

inline FpPoly fp_deriv(const FpPoly& a, std::uint64_t p) {
    if (a.size() <= 1) return {};
    FpPoly d(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) d[i - 1] = (a[i] * (i % p)) % p;
    fp_strip(d);
    return d;
}

// h^p mod f by square-and-multiply on the exponent.
inline FpPoly fp_pow_frobenius(const FpPoly& h, const FpPoly& f, std::uint64_t p) {
    FpPoly result{1};
    FpPoly base = fp_mod(h, f, p);
    std::uint64_t e = p;
    while (e > 0) {
        if (e & 1) result = fp_mod(fp_mul(result, base, p), f, p);
        base = fp_mod(fp_mul(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

// Radical (square-free part) of monic a over F_p, monic.
inline FpPoly fp_radical(FpPoly a, std::uint64_t p) {
    if (a.size() <= 1) return {1};
    if (!a.empty() && a.back() != 1) {
        const std::uint64_t inv = fp_inv(a.back(), p);
        for (auto& c : a) c = (c * inv) % p;
    }
    FpPoly d = fp_deriv(a, p);
    if (d.empty()) {
        // a = g(x^p); over the prime field the p-th root keeps coefficients.
        FpPoly g((a.size() - 1) / p + 1);
        for (size_t i = 0; i < g.size(); ++i) g[i] = a[i * p];
        return fp_radical(std::move(g), p);
    }
    FpPoly gd = fp_gcd(a, d, p);
    FpPoly w = fp_divexact(a, gd, p);  // distinct factors with exponent not divisible by p
    // Strip w-factors from gd; what remains has only p-divisible exponents.
    FpPoly v = gd;
    for (;;) {
        FpPoly g = fp_gcd(v, w, p);
        if (g.size() <= 1) break;
        v = fp_divexact(v, g, p);
    }
    if (v.size() <= 1) return w;
    return fp_mul(w, fp_radical(std::move(v), p), p);
}

inline IntPoly fp_lift(const FpPoly& a) {
    std::vector<Int> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = static_cast<long>(a[i]);
    return IntPoly(std::move(c));
}

}  // namespace ancensus::detail

#endif
