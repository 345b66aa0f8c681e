#ifndef ANCENSUS_PILA_HPP
#define ANCENSUS_PILA_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "ancensus/census.hpp"
#include "ancensus/disc_fiber.hpp"

namespace ancensus {

/// Exact rational growth exponents attached to degree n.
struct ExponentSet {
    int n = 0;
    Rat theorem_exp;     // (n^2 - 2) / (4(n - 1))
    Rat schmidt_exp;     // (n + 2) / 4
    Rat malle_exp;       // 1/2
    Rat pila_fiber_exp;  // n / (4(n - 1))
    int log_power = 0;   // 2n + 1
};

/// Requires n >= 3; throws std::domain_error otherwise.
ExponentSet theorem_exponents(int n);

struct PilaBoundInput {
    int d = 1;      // curve degree, >= 1
    double b = 2.0; // coordinate bound, > 1
};

/// log10 of (3d)^{4d+8} * B^{1/d} * (log B)^{2d+3}; log is natural.
double pila_bound_log10(const PilaBoundInput& input);

/// The bound itself; +infinity when it overflows double precision.
double pila_bound_value(const PilaBoundInput& input);

/// Number of integers a_n with |a_n| <= floor(c X^{n/(2(n-1))}) whose fiber
/// discriminant value is a perfect square with root <= floor(c X^{n/4}).
/// Zero values count only when include_singular is set.
std::uint64_t count_fiber_points(const FiberBase& base, long long x, const BoxConst& c,
                                 bool include_singular);

struct FiberScanResult {
    std::vector<std::pair<long long, std::uint64_t>> counts;  // (X, count)
    double slope = 0.0;          // log(count+1) vs log X
    bool within_pila_bound = false;
};

/// Point counts over an X grid on one geometrically irreducible fiber;
/// throws std::domain_error for reducible fibers or grids of < 3 points.
FiberScanResult fiber_exponent_scan(const FiberBase& base, const std::vector<long long>& grid,
                                    const BoxConst& c);

}  // namespace ancensus

#endif
