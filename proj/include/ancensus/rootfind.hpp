#ifndef ANCENSUS_ROOTFIND_HPP
#define ANCENSUS_ROOTFIND_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "ancensus/intpoly.hpp"

namespace ancensus {

struct RootFindConfig {
    int max_iter = 200;
    double tol = 1e-12;
    std::uint64_t seed = 0x5eed5eed5eedULL;
};

/// All complex roots of p (with multiplicity, as clusters) by simultaneous
/// Durand-Kerner iteration. Exact trailing zeros are deflated before
/// iterating. Throws numeric_failure if neither the step tolerance nor a
/// backward-error bound is met within the iteration budget.
std::vector<std::complex<double>> complex_roots(const IntPoly& p, const RootFindConfig& cfg = {});

}  // namespace ancensus

#endif
