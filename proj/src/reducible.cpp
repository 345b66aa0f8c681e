#include "ancensus/reducible.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "ancensus/fitting.hpp"

namespace ancensus {

namespace {

// Visits every base (a_2 .. a_{n-1}) with |a_j| <= H, lexicographically.
void for_each_base(int n, long long h, const std::function<void(const std::vector<Int>&)>& visit) {
    const size_t m = static_cast<size_t>(n - 2);
    std::vector<long long> idx(m, -h);
    std::vector<Int> coeffs(m);
    for (;;) {
        for (size_t i = 0; i < m; ++i) coeffs[i] = static_cast<long>(idx[i]);
        visit(coeffs);
        size_t pos = m;
        while (pos-- > 0) {
            if (idx[pos] < h) {
                ++idx[pos];
                break;
            }
            idx[pos] = -h;
        }
        if (pos == static_cast<size_t>(-1)) break;
    }
}

}  // namespace

ReducibleScanReport scan_reducible_fibers(int n, long long h) {
    if (n < 3 || h < 0) throw std::domain_error("scan_reducible_fibers: requires n >= 3, H >= 0");
    ReducibleScanReport report;
    report.n = n;
    report.h = h;
    for_each_base(n, h, [&](const std::vector<Int>& coeffs) {
        ++report.total_bases;
        FiberCurve curve = classify_fiber(FiberBase(n, coeffs));
        if (!curve.geometrically_irreducible) report.hits.push_back(std::move(curve));
    });
    return report;
}

double reducible_growth_exponent(int n, const std::vector<long long>& h_grid) {
    if (n % 2 == 0)
        throw std::domain_error("reducible_growth_exponent: even n has no reducible fibers");
    if (std::set<long long>(h_grid.begin(), h_grid.end()).size() < 3)
        throw std::domain_error("reducible_growth_exponent: need >= 3 distinct H values");
    std::vector<std::pair<double, double>> pts;
    for (long long h : h_grid) {
        const ReducibleScanReport report = scan_reducible_fibers(n, h);
        pts.emplace_back(static_cast<double>(2 * h + 1),
                         static_cast<double>(report.hits.size()));
    }
    return fit_exponent_plus_one(pts);
}

std::vector<std::pair<long long, std::uint64_t>> box_stabilization_findisc(
    int n, const IntPoly& p_target, const std::vector<long long>& h_grid) {
    if (n < 3) throw std::domain_error("box_stabilization_findisc: requires n >= 3");
    if (p_target.degree() != n - 1)
        throw std::domain_error("box_stabilization_findisc: target degree must be n - 1");
    std::vector<std::pair<long long, std::uint64_t>> out;
    for (long long h : h_grid) {
        std::uint64_t count = 0;
        for_each_base(n, h, [&](const std::vector<Int>& coeffs) {
            if (fiber_disc_poly(FiberBase(n, coeffs)) == p_target) ++count;
        });
        out.emplace_back(h, count);
    }
    return out;
}

}  // namespace ancensus
