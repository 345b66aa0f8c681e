#ifndef ANCENSUS_TESTS_ORACLES_HPP
#define ANCENSUS_TESTS_ORACLES_HPP

// Independent brute-force oracles used only by tests. Deliberately naive:
// each computes the same quantity as the library by a different method.

#include <complex>
#include <random>
#include <vector>

#include "ancensus/intpoly.hpp"
#include "ancensus/rootfind.hpp"

namespace ancensus::test_oracles {

/// Resultant as the determinant of the Sylvester matrix, by exact
/// fraction-free-less Gaussian elimination over Q.
inline Int sylvester_resultant(const IntPoly& f, const IntPoly& g) {
    const int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) throw std::domain_error("sylvester oracle: zero polynomial");
    const int size = m + n;
    if (size == 0) return 1;
    std::vector<std::vector<Rat>> a(static_cast<size_t>(size),
                                    std::vector<Rat>(static_cast<size_t>(size), Rat(0)));
    // n rows of f's coefficients, then m rows of g's, highest degree first.
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) a[r][r + k] = Rat(f.coeff(m - k));
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) a[n + r][r + k] = Rat(g.coeff(n - k));

    Rat det(1);
    for (int col = 0; col < size; ++col) {
        int pivot = -1;
        for (int r = col; r < size; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        const Rat inv = Rat(1) / a[col][col];
        for (int r = col + 1; r < size; ++r) {
            if (a[r][col] == 0) continue;
            const Rat factor = a[r][col] * inv;
            for (int k = col; k < size; ++k) a[r][k] -= factor * a[col][k];
        }
    }
    det.canonicalize();
    if (det.get_den() != 1) throw std::logic_error("sylvester oracle: non-integer determinant");
    return det.get_num();
}

/// Discriminant from numerically computed roots:
/// lc^{2n-2} prod_{i<j} (r_i - r_j)^2.
inline double numeric_discriminant(const IntPoly& f) {
    const auto roots = complex_roots(f);
    std::complex<double> prod(1.0, 0.0);
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j) {
            const std::complex<double> d = roots[i] - roots[j];
            prod *= d * d;
        }
    const double lc = f.lc().get_d();
    return std::pow(lc, 2 * f.degree() - 2) * prod.real();
}

/// Reducibility over Q for monic f with nonzero discriminant, by rounding
/// products of numeric-root subsets to candidate integer factors and
/// verifying exact division.
inline bool numeric_reducible(const IntPoly& f) {
    const int n = f.degree();
    const auto roots = complex_roots(f);
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        const int bits = __builtin_popcount(mask);
        if (bits > n / 2) continue;
        std::vector<std::complex<double>> factor_roots;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) factor_roots.push_back(roots[static_cast<size_t>(i)]);
        // Expand prod (t - r) numerically.
        std::vector<std::complex<double>> c{1.0};
        for (const auto& r : factor_roots) {
            c.push_back(0.0);
            for (size_t k = c.size() - 1; k > 0; --k) c[k] = c[k - 1] - r * c[k];
            c[0] *= -r;
        }
        // c is lowest-degree first, matching the IntPoly convention.
        std::vector<Int> rounded(c.size());
        bool near_integer = true;
        for (size_t k = 0; k < c.size(); ++k) {
            const double re = c[k].real();
            rounded[k] = Int(static_cast<long>(std::llround(re)));
            if (std::abs(re - std::llround(re)) > 0.2 || std::abs(c[k].imag()) > 0.2)
                near_integer = false;
        }
        if (!near_integer) continue;
        IntPoly g{std::vector<Int>(rounded)};
        if (g.degree() == bits && try_exact_div(f, g)) return true;
    }
    return false;
}

/// Random polynomial with |coeff| <= height, nonzero leading coefficient.
inline IntPoly random_poly(std::mt19937_64& rng, int degree, long height) {
    std::uniform_int_distribution<long> dist(-height, height);
    std::vector<Int> c(static_cast<size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i) c[static_cast<size_t>(i)] = dist(rng);
    long lead = 0;
    while (lead == 0) lead = dist(rng);
    c[static_cast<size_t>(degree)] = lead;
    return IntPoly(std::move(c));
}

}  // namespace ancensus::test_oracles

#endif
