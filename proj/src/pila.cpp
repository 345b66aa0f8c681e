#include "ancensus/pila.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ancensus/fitting.hpp"

namespace ancensus {

ExponentSet theorem_exponents(int n) {
    if (n < 3) throw std::domain_error("theorem_exponents: requires n >= 3");
    ExponentSet e;
    e.n = n;
    e.theorem_exp = Rat(n * n - 2, 4 * (n - 1));
    e.schmidt_exp = Rat(n + 2, 4);
    e.malle_exp = Rat(1, 2);
    e.pila_fiber_exp = Rat(n, 4 * (n - 1));
    e.log_power = 2 * n + 1;
    e.theorem_exp.canonicalize();
    e.schmidt_exp.canonicalize();
    e.malle_exp.canonicalize();
    e.pila_fiber_exp.canonicalize();
    return e;
}

double pila_bound_log10(const PilaBoundInput& input) {
    if (input.d < 1 || !(input.b > 1.0))
        throw std::domain_error("pila bound: requires d >= 1 and B > 1");
    const double d = input.d;
    return (4 * d + 8) * std::log10(3 * d) + std::log10(input.b) / d +
           (2 * d + 3) * std::log10(std::log(input.b));
}

double pila_bound_value(const PilaBoundInput& input) {
    const double lg = pila_bound_log10(input);
    if (lg > 308.0) return std::numeric_limits<double>::infinity();
    return std::pow(10.0, lg);
}

std::uint64_t count_fiber_points(const FiberBase& base, long long x, const BoxConst& c,
                                 bool include_singular) {
    if (x < 1) throw std::domain_error("count_fiber_points: requires X >= 1");
    const int n = base.n;
    const long long bn = floor_c_root_pow(c, x, n, 2 * (n - 1));
    const long long d_bound = floor_c_root_pow(c, x, n, 4);
    const IntPoly p = fiber_disc_poly(base);

    std::uint64_t count = 0;
    SquareScanCallbacks cb;
    cb.on_square = [&](long long, const Int& d) {
        if (cmp(d, static_cast<long>(d_bound)) <= 0) ++count;
    };
    if (include_singular) cb.on_zero = [&](long long) { ++count; };
    scan_square_values(p, bn, cb);
    return count;
}

FiberScanResult fiber_exponent_scan(const FiberBase& base, const std::vector<long long>& grid,
                                    const BoxConst& c) {
    if (grid.size() < 3)
        throw std::domain_error("fiber_exponent_scan: need at least 3 grid points");
    const FiberCurve curve = classify_fiber(base);
    if (!curve.geometrically_irreducible)
        throw std::domain_error("fiber_exponent_scan: fiber is geometrically reducible");

    FiberScanResult result;
    result.within_pila_bound = true;
    std::vector<std::pair<double, double>> pts;
    for (long long x : grid) {
        const std::uint64_t count = count_fiber_points(base, x, c, false);
        result.counts.emplace_back(x, count);
        pts.emplace_back(static_cast<double>(x), static_cast<double>(count));
        if (count > 0) {
            PilaBoundInput in;
            in.d = base.n - 1;
            in.b = c.value() * std::pow(static_cast<double>(x), base.n / 4.0);
            if (in.b > 1.0 &&
                std::log10(static_cast<double>(count)) > pila_bound_log10(in))
                result.within_pila_bound = false;
        }
    }
    result.slope = fit_exponent_plus_one(pts);
    return result;
}

}  // namespace ancensus
