#ifndef ANCENSUS_CENSUS_HPP
#define ANCENSUS_CENSUS_HPP

#include <functional>
#include <string>
#include <vector>

#include "ancensus/disc_fiber.hpp"
#include "ancensus/galois.hpp"
#include "ancensus/intpoly.hpp"

namespace ancensus {

/// Exact rational box constant (the paper's implied constants are
/// unspecified; counts are reported per c and checked for stabilization).
struct BoxConst {
    long num = 4;
    long den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    static BoxConst parse(const std::string& text);
    std::string to_string() const;
};

/// floor(c * X^{j/(2q)}) computed exactly in integer arithmetic.
long long floor_c_root_pow(const BoxConst& c, long long x, int j, int two_q);

struct SearchBox {
    int n = 0;
    long long x = 0;
    BoxConst c;
    std::vector<long long> bounds;  // bounds[j-2] = B_j, j = 2..n
    long long d_bound = 0;

    long long bound_for(int j) const { return bounds[static_cast<size_t>(j - 2)]; }
    // Total number of coefficient tuples, prod (2 B_j + 1).
    Int tuple_count() const;
};

SearchBox make_search_box(int n, long long x, const BoxConst& c);

/// Visits coefficient tuples (a_2, ..., a_n) in lexicographic order with
/// a_2 restricted to [a2_lo, a2_hi]; the full box is a2_lo = -B_2,
/// a2_hi = B_2. Disjoint a_2 subranges partition the box.
void for_each_tuple(const SearchBox& box, long long a2_lo, long long a2_hi,
                    const std::function<void(const std::vector<long long>&)>& visit);

struct CensusCheckpoint {
    long long x = 0;
    std::uint64_t points_on_r = 0;
    std::uint64_t an_polys = 0;
    std::uint64_t fields = 0;
    std::uint64_t unknown_verdicts = 0;
};

struct CensusDiagnostics {
    std::uint64_t disc_zero = 0;
    std::uint64_t certified_not_an = 0;
    std::uint64_t unresolved_field_discs = 0;
};

struct CensusConfig {
    int n = 3;
    long long xmax = 1000;
    double grid_ratio = 3.1622776601683795;  // sqrt(10)
    BoxConst c{4, 1};
    int prime_budget = 100;
    int fingerprint_primes = 25;
    int partitions = 1;
    // n = 3: dedup classes keyed by the exact field discriminant.
    // Other n: keyed by minimal polynomial discriminant, an upper-bound proxy.
    bool field_mode = true;
};

struct CensusSummary {
    CensusConfig config;
    std::vector<CensusCheckpoint> checkpoints;  // ascending X, cumulative counts
    CensusDiagnostics diagnostics;
    // True when every dedup class got an exact field discriminant (n = 3).
    bool field_disc_exact = false;
};

/// Scans the full Minkowski box at xmax, certifies candidates, dedups
/// fields, and reports cumulative counts at each geometric checkpoint.
CensusSummary run_census(const CensusConfig& cfg);

/// Number of cyclic cubic fields with discriminant (= conductor^2) <= X,
/// by conductor enumeration: valid conductors are products of distinct
/// primes = 1 mod 3, optionally times 9, each contributing 2^{omega-1}.
std::uint64_t cyclic_cubic_oracle(long long x);

/// Visits every y in [-B, B] with p(y) >= 0, reporting perfect squares and
/// zeros. Negative stretches are skipped using numerically located sign
/// boundaries; the sign decisions themselves are exact.
struct SquareScanCallbacks {
    // y with p(y) = d^2 > 0.
    std::function<void(long long y, const Int& d)> on_square;
    // y with p(y) = 0.
    std::function<void(long long y)> on_zero;
};
void scan_square_values(const IntPoly& p, long long b, const SquareScanCallbacks& cb);

}  // namespace ancensus

#endif
