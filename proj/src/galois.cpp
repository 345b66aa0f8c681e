#include "ancensus/galois.hpp"

#include "ancensus/detail/fppoly.hpp"
#include "ancensus/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ancensus {

using detail::FpPoly;
using detail::fp_deriv;
using detail::fp_divexact;
using detail::fp_gcd;
using detail::fp_mod;
using detail::fp_mul;
using detail::fp_pow_frobenius;
using detail::fp_reduce;
using detail::fp_strip;

int CycleType::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool CycleType::even_parity() const {
    return (n() - static_cast<int>(parts.size())) % 2 == 0;
}

std::string CycleType::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ",";
        os << parts[i];
    }
    os << ")";
    return os.str();
}

const std::vector<long>& small_primes(int count) {
    static std::vector<long> primes;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(primes.size()) < count) {
        long c = primes.empty() ? 2 : primes.back() + 1;
        for (;; ++c) {
            bool ok = true;
            for (long d = 2; d * d <= c; ++d)
                if (c % d == 0) {
                    ok = false;
                    break;
                }
            if (ok) break;
        }
        primes.push_back(c);
    }
    return primes;
}

namespace {

bool is_prime_small(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

CycleType factor_pattern_mod_p(const IntPoly& f, long p) {
    if (!is_prime_small(p)) throw std::domain_error("factor_pattern_mod_p: p not prime");
    const std::uint64_t up = static_cast<std::uint64_t>(p);
    FpPoly fbar = fp_reduce(f, up);
    if (static_cast<int>(fbar.size()) - 1 != f.degree())
        throw std::domain_error("factor_pattern_mod_p: leading coefficient vanishes mod p");
    FpPoly g = fp_gcd(fbar, fp_deriv(fbar, up), up);
    if (g.size() != 1)
        throw std::domain_error("factor_pattern_mod_p: ramified prime (f not squarefree mod p)");

    CycleType ct;
    FpPoly v = fbar;
    FpPoly h{0, 1};  // x
    int d = 0;
    while (static_cast<int>(v.size()) - 1 > 0) {
        ++d;
        if (2 * d > static_cast<int>(v.size()) - 1) {
            ct.parts.push_back(static_cast<int>(v.size()) - 1);
            break;
        }
        h = fp_pow_frobenius(h, v, up);
        FpPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = (hx[1] + up - 1) % up;
        fp_strip(hx);
        FpPoly w = fp_gcd(v, hx, up);
        if (w.size() > 1) {
            const int deg_w = static_cast<int>(w.size()) - 1;
            for (int i = 0; i < deg_w / d; ++i) ct.parts.push_back(d);
            v = fp_divexact(v, w, up);
            h = fp_mod(h, v, up);
        }
    }
    std::sort(ct.parts.begin(), ct.parts.end());
    return ct;
}

namespace {

// Achievable factor-degree subset sums of a cycle type, as a bitmask.
std::uint64_t subset_sums(const CycleType& ct) {
    std::uint64_t mask = 1;
    for (int part : ct.parts) mask |= mask << part;
    return mask;
}

Int l2_norm_ceil(const IntPoly& f) {
    Int s(0);
    for (const Int& c : f.coeffs()) s += c * c;
    Int r;
    mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
    if (r * r < s) r += 1;
    return r;
}

// Monic degree-1 factors are exactly integer roots. Candidates are taken
// from numerically isolated roots (simple roots, so well conditioned) and
// confirmed by exact evaluation; a found root is always exact.
bool has_integer_root(const IntPoly& f) {
    RootFindConfig cfg;
    cfg.seed = 0x900700ULL;
    for (const auto& r : complex_roots(f, cfg)) {
        if (std::abs(r.imag()) > 0.5) continue;
        const double re = std::min(std::max(r.real(), -9.0e17), 9.0e17);
        const long long c = std::llround(re);
        for (long long t = c - 2; t <= c + 2; ++t)
            if (f.eval(Int(static_cast<long>(t))) == 0) return true;
    }
    return false;
}

// Searches for a monic factor of degree d with coefficients bounded by
// the Mignotte bound. Exact: returns true iff such a factor exists.
bool has_monic_factor_of_degree(const IntPoly& f, int d) {
    Int bound = l2_norm_ceil(f);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(d));
    if (d == 1 && (!bound.fits_slong_p() || bound.get_si() > 20000))
        return has_integer_root(f);
    if (!bound.fits_slong_p())
        throw std::domain_error("is_irreducible_q: factor search bound too large");
    const long B = bound.get_si();
    const Int f0 = f.coeff(0);
    const Int f1 = f.eval(Int(1));
    const Int fm1 = f.eval(Int(-1));

    std::vector<Int> cand(static_cast<size_t>(d) + 1, Int(0));
    cand[static_cast<size_t>(d)] = 1;
    // Odometer over the d free coefficients cand[0..d-1].
    std::vector<long> idx(static_cast<size_t>(d), -B);
    for (;;) {
        for (int i = 0; i < d; ++i) cand[static_cast<size_t>(i)] = idx[static_cast<size_t>(i)];
        bool viable = idx[0] != 0 && mpz_divisible_p(f0.get_mpz_t(), cand[0].get_mpz_t());
        if (viable && f1 != 0) {
            IntPoly g{std::vector<Int>(cand)};
            Int g1 = g.eval(Int(1));
            viable = g1 != 0 && mpz_divisible_p(f1.get_mpz_t(), g1.get_mpz_t());
            if (viable && fm1 != 0) {
                Int gm1 = g.eval(Int(-1));
                viable = gm1 != 0 && mpz_divisible_p(fm1.get_mpz_t(), gm1.get_mpz_t());
            }
            if (viable && try_exact_div(f, g)) return true;
        } else if (viable) {
            IntPoly g{std::vector<Int>(cand)};
            if (try_exact_div(f, g)) return true;
        }
        int pos = 0;
        while (pos < d && ++idx[static_cast<size_t>(pos)] > B) {
            idx[static_cast<size_t>(pos)] = -B;
            ++pos;
        }
        if (pos == d) break;
    }
    return false;
}

}  // namespace

bool is_irreducible_q(const IntPoly& f) {
    const int n = f.degree();
    if (n < 1 || f.lc() != 1) throw std::domain_error("is_irreducible_q: requires monic, degree >= 1");
    if (n == 1) return true;
    const Int disc = discriminant(f);
    if (disc == 0) throw std::domain_error("is_irreducible_q: repeated roots (disc = 0)");
    if (f.coeff(0) == 0) return false;  // t divides f

    std::uint64_t allowed = ~0ULL;
    const std::vector<long>& primes = small_primes(64);
    int used = 0;
    for (long p : primes) {
        if (used >= 12) break;
        if (mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        allowed &= subset_sums(factor_pattern_mod_p(f, p));
        ++used;
        if ((allowed & ((1ULL << n) - 2)) == 0) return true;  // only {0, n} survive
    }
    for (int d = 1; d <= n / 2; ++d) {
        if (!(allowed & (1ULL << d))) continue;
        if (has_monic_factor_of_degree(f, d)) return false;
    }
    return true;
}

IntPoly resolvent_cubic(const IntPoly& quartic) {
    if (quartic.degree() != 4 || quartic.lc() != 1 || quartic.coeff(3) != 0)
        throw std::domain_error("resolvent_cubic: requires monic depressed quartic");
    const Int& p = quartic.coeff(2);
    const Int& q = quartic.coeff(1);
    const Int& r = quartic.coeff(0);
    std::vector<Int> c(4);
    c[3] = 1;
    c[2] = -p;
    c[1] = -4 * r;
    c[0] = 4 * p * r - q * q;
    return IntPoly(std::move(c));
}

std::string GaloisVerdict::to_string() const {
    switch (kind) {
        case Kind::CertifiedAn:
            return "CertifiedAn";
        case Kind::Unknown:
            return "Unknown";
        case Kind::CertifiedNotAn:
            switch (reason) {
                case Reason::NonSquareDisc:
                    return "CertifiedNotAn(NonSquareDisc)";
                case Reason::Reducible:
                    return "CertifiedNotAn(Reducible)";
                case Reason::OddCycleTypeObserved:
                    return "CertifiedNotAn(OddCycleTypeObserved)";
                case Reason::ProperSubgroupCertificate:
                    return "CertifiedNotAn(ProperSubgroupCertificate)";
                default:
                    return "CertifiedNotAn";
            }
    }
    return "Unknown";
}

namespace {

// True when the observed cycle type yields a power that is a single
// q-cycle certifying A_n: Jordan's criterion for q <= n-3, the 3-cycle
// theorem for q = 3, with primitivity guaranteed by n prime or q > n/2.
bool cycle_type_certifies(int n, const CycleType& ct) {
    for (int q : ct.parts) {
        if (q < 3 || q == n || !is_prime_small(q)) continue;
        int divisible = 0;
        for (int part : ct.parts)
            if (part % q == 0) ++divisible;
        if (divisible != 1) continue;
        const bool primitive = is_prime_small(n) || 2 * q > n;
        const bool jordan = (q == 3) || (q <= n - 3) || (2 * q > n && q < n - 2);
        if (primitive && jordan) return true;
    }
    return false;
}

}  // namespace

GaloisVerdict certify_an(const IntPoly& f, int prime_budget) {
    const int n = f.degree();
    if (n < 3 || f.lc() != 1) throw std::domain_error("certify_an: requires monic, degree >= 3");
    GaloisVerdict v;

    const Int disc = discriminant(f);
    if (disc == 0 || !is_square_int(disc)) {
        v.kind = GaloisVerdict::Kind::CertifiedNotAn;
        v.reason = GaloisVerdict::Reason::NonSquareDisc;
        return v;
    }
    if (!is_irreducible_q(f)) {
        v.kind = GaloisVerdict::Kind::CertifiedNotAn;
        v.reason = GaloisVerdict::Reason::Reducible;
        return v;
    }
    if (n == 3) {
        // Transitive subgroups of S_3 inside A_3: only A_3 itself.
        v.kind = GaloisVerdict::Kind::CertifiedAn;
        return v;
    }
    if (n == 4 && f.coeff(3) == 0) {
        IntPoly res = resolvent_cubic(f);
        if (discriminant(res) != 0 && is_irreducible_q(res)) {
            v.kind = GaloisVerdict::Kind::CertifiedAn;
        } else {
            // Square disc + irreducible + reducible resolvent: Galois group V_4.
            v.kind = GaloisVerdict::Kind::CertifiedNotAn;
            v.reason = GaloisVerdict::Reason::ProperSubgroupCertificate;
        }
        return v;
    }

    const std::vector<long>& primes = small_primes(prime_budget + 64);
    int used = 0;
    for (long p : primes) {
        if (used >= prime_budget) break;
        if (mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        CycleType ct = factor_pattern_mod_p(f, p);
        ++used;
        if (!ct.even_parity()) {
            // Inconsistent with a square discriminant; flags a bug upstream.
            v.kind = GaloisVerdict::Kind::CertifiedNotAn;
            v.reason = GaloisVerdict::Reason::OddCycleTypeObserved;
            v.witness_prime = p;
            return v;
        }
        if (cycle_type_certifies(n, ct)) {
            v.kind = GaloisVerdict::Kind::CertifiedAn;
            v.witness_prime = p;
            return v;
        }
    }
    v.kind = GaloisVerdict::Kind::Unknown;
    return v;
}

std::vector<std::pair<long, CycleType>> field_fingerprint(const IntPoly& f, int prime_count) {
    std::vector<std::pair<long, CycleType>> out;
    if (prime_count <= 0) return out;
    const Int disc = discriminant(f);
    if (disc == 0) throw std::domain_error("field_fingerprint: disc = 0");
    const std::vector<long>& primes = small_primes(prime_count + 64);
    for (long p : primes) {
        if (static_cast<int>(out.size()) >= prime_count) break;
        if (mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        out.emplace_back(p, factor_pattern_mod_p(f, p));
    }
    return out;
}

bool same_field_heuristic(const IntPoly& f, const IntPoly& g, int prime_count) {
    if (f.degree() != g.degree())
        throw std::domain_error("same_field_heuristic: degree mismatch");
    const Int df = discriminant(f), dg = discriminant(g);
    if (df == 0 || dg == 0) throw std::domain_error("same_field_heuristic: zero discriminant");
    // Square-free kernels (with sign) agree iff the product is a square.
    if (!is_square_int(df * dg)) return false;
    const std::vector<long>& primes = small_primes(prime_count);
    for (int i = 0; i < prime_count; ++i) {
        const long p = primes[static_cast<size_t>(i)];
        if (mpz_divisible_ui_p(df.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        if (mpz_divisible_ui_p(dg.get_mpz_t(), static_cast<unsigned long>(p))) continue;
        if (!(factor_pattern_mod_p(f, p) == factor_pattern_mod_p(g, p))) return false;
    }
    return true;
}

}  // namespace ancensus
