#include "ancensus/rootfind.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "ancensus/errors.hpp"

namespace ancensus {

namespace {

using cplx = std::complex<double>;

cplx horner(const std::vector<double>& c, const cplx& z) {
    cplx acc(0.0, 0.0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

// Sum |c_i| |z|^i, the scale for a backward-error bound on |p(z)|.
double eval_scale(const std::vector<double>& c, const cplx& z) {
    double a = std::abs(z), acc = 0.0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * a + std::abs(c[i]);
    return acc;
}

}  // namespace

std::vector<cplx> complex_roots(const IntPoly& p, const RootFindConfig& cfg) {
    if (p.is_zero()) throw std::domain_error("complex_roots: zero polynomial");
    std::vector<cplx> roots;
    int lo = 0;
    while (p.coeff(lo) == 0) {
        roots.emplace_back(0.0, 0.0);
        ++lo;
    }
    const int deg = p.degree() - lo;
    if (deg == 0) return roots;

    // Monic double coefficients of the deflated polynomial.
    std::vector<double> c(static_cast<size_t>(deg) + 1);
    const double lead = p.lc().get_d();
    for (int i = 0; i <= deg; ++i) c[static_cast<size_t>(i)] = p.coeff(lo + i).get_d() / lead;

    double radius = 0.0;
    for (int i = 0; i < deg; ++i) radius = std::max(radius, std::abs(c[static_cast<size_t>(i)]));
    radius = 1.0 + radius;  // Cauchy bound

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> jitter(-0.05, 0.05);
    std::vector<cplx> z(static_cast<size_t>(deg));
    for (int i = 0; i < deg; ++i) {
        const double ang = 2.0 * M_PI * (i + 0.3) / deg + jitter(rng);
        z[static_cast<size_t>(i)] = radius * cplx(std::cos(ang), std::sin(ang));
    }

    const double eps = std::numeric_limits<double>::epsilon();
    for (int iter = 0; iter < cfg.max_iter; ++iter) {
        double max_step = 0.0;
        for (int i = 0; i < deg; ++i) {
            cplx denom(1.0, 0.0);
            for (int j = 0; j < deg; ++j)
                if (j != i) denom *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
            if (denom == cplx(0.0, 0.0)) {
                z[static_cast<size_t>(i)] += cplx(1e-8 * radius, 1e-8 * radius);
                continue;
            }
            const cplx step = horner(c, z[static_cast<size_t>(i)]) / denom;
            z[static_cast<size_t>(i)] -= step;
            max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[static_cast<size_t>(i)])));
        }
        if (max_step < cfg.tol) break;
        if (iter == cfg.max_iter - 1) {
            // Clustered (multiple) roots stall above the step tolerance;
            // accept if every residual is at rounding level.
            for (int i = 0; i < deg; ++i) {
                const double res = std::abs(horner(c, z[static_cast<size_t>(i)]));
                const double scale = eval_scale(c, z[static_cast<size_t>(i)]);
                if (res > 1e4 * eps * std::max(scale, 1.0))
                    throw numeric_failure("complex_roots: no convergence within iteration budget");
            }
        }
    }

    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

}  // namespace ancensus
