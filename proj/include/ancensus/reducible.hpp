#ifndef ANCENSUS_REDUCIBLE_HPP
#define ANCENSUS_REDUCIBLE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ancensus/disc_fiber.hpp"

namespace ancensus {

struct ReducibleScanReport {
    int n = 0;
    long long h = 0;
    // Fibers whose discriminant polynomial is a constant times a square.
    std::vector<FiberCurve> hits;
    std::uint64_t total_bases = 0;
};

/// Exhaustive classification of every base with |a_j| <= H, j = 2..n-1.
ReducibleScanReport scan_reducible_fibers(int n, long long h);

/// Least-squares slope of log(hits+1) against log(2H+1); requires odd n
/// and at least 3 distinct grid values.
double reducible_growth_exponent(int n, const std::vector<long long>& h_grid);

/// For each H, the number of bases in the box whose fiber discriminant
/// polynomial equals p_target exactly; constant for large H (finiteness).
std::vector<std::pair<long long, std::uint64_t>> box_stabilization_findisc(
    int n, const IntPoly& p_target, const std::vector<long long>& h_grid);

}  // namespace ancensus

#endif
