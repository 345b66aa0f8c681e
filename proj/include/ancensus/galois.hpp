#ifndef ANCENSUS_GALOIS_HPP
#define ANCENSUS_GALOIS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ancensus/intpoly.hpp"

namespace ancensus {

/// Multiset of irreducible-factor degrees of f mod p; equals the cycle
/// type of Frobenius for unramified p.
struct CycleType {
    std::vector<int> parts;  // sorted ascending, sums to n

    int n() const;
    // Even iff n - #parts is even.
    bool even_parity() const;
    bool operator==(const CycleType& o) const { return parts == o.parts; }
    std::string to_string() const;
};

/// First `count` primes in increasing order.
const std::vector<long>& small_primes(int count);

/// Factor degrees of f mod p via distinct-degree factorization.
/// Throws std::domain_error if p ramifies (f mod p not squarefree).
CycleType factor_pattern_mod_p(const IntPoly& f, long p);

/// Exact irreducibility over Q for monic f with nonzero discriminant.
/// Degree-set sieve mod several good primes, then a Mignotte-bounded
/// factor search for any surviving proper degree.
bool is_irreducible_q(const IntPoly& f);

/// Resolvent cubic t^3 - p t^2 - 4 r t + (4 p r - q^2) of the depressed
/// quartic t^4 + p t^2 + q t + r.
IntPoly resolvent_cubic(const IntPoly& quartic);

struct GaloisVerdict {
    enum class Kind { CertifiedAn, CertifiedNotAn, Unknown };
    enum class Reason {
        None,
        NonSquareDisc,
        Reducible,
        OddCycleTypeObserved,
        ProperSubgroupCertificate,
    };
    Kind kind = Kind::Unknown;
    Reason reason = Reason::None;
    // Witness data when certification came from a sampled cycle type.
    long witness_prime = 0;

    bool certified_an() const { return kind == Kind::CertifiedAn; }
    std::string to_string() const;
};

/// Decides whether Gal of the splitting field of f is A_n, using the
/// square-discriminant filter, exact irreducibility, the quartic
/// resolvent, and Frobenius cycle-type sampling up to prime_budget
/// good primes. Unknown is a value, not an error.
GaloisVerdict certify_an(const IntPoly& f, int prime_budget = 100);

/// Cycle types at the first prime_count primes not dividing disc(f).
std::vector<std::pair<long, CycleType>> field_fingerprint(const IntPoly& f, int prime_count);

/// Monte Carlo field-isomorphism test: true iff the patterns agree at
/// every common good prime among the first prime_count primes and the
/// square-free kernels of the discriminants match. Exact for degree <= 6.
bool same_field_heuristic(const IntPoly& f, const IntPoly& g, int prime_count = 25);

}  // namespace ancensus

#endif
