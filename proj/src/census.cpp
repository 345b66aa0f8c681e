#include "ancensus/census.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "ancensus/cubic_order.hpp"
#include "ancensus/errors.hpp"
#include "ancensus/rootfind.hpp"

namespace ancensus {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

Int u128_to_int(u128 v) {
    Int r(static_cast<unsigned long>(v >> 64));
    r <<= 64;
    r += static_cast<unsigned long>(v);
    return r;
}

// Quadratic-residue bitmasks modulo 64, 63, 65: together they reject
// ~96% of non-squares before the integer square root.
struct SquareFilter {
    std::uint64_t mask64 = 0;
    std::array<bool, 63> mod63{};
    std::array<bool, 65> mod65{};
    SquareFilter() {
        for (int k = 0; k < 64; ++k) mask64 |= std::uint64_t(1) << ((k * k) & 63);
        for (int k = 0; k < 63; ++k) mod63[static_cast<size_t>((k * k) % 63)] = true;
        for (int k = 0; k < 65; ++k) mod65[static_cast<size_t>((k * k) % 65)] = true;
    }
};
const SquareFilter kSquareFilter;

bool u128_perfect_square(u128 v, u128* root) {
    if (!(kSquareFilter.mask64 >> (static_cast<std::uint64_t>(v) & 63) & 1)) return false;
    if (!kSquareFilter.mod63[static_cast<size_t>(v % 63)]) return false;
    if (!kSquareFilter.mod65[static_cast<size_t>(v % 65)]) return false;
    u128 r = static_cast<u128>(sqrtl(static_cast<long double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    if (r * r != v) return false;
    *root = r;
    return true;
}

// Inclusive integer intervals to scan, sorted and disjoint.
using Segments = std::vector<std::pair<long long, long long>>;

Segments candidate_segments(const IntPoly& p, long long b) {
    constexpr long long kFullScanWidth = 1 << 14;
    constexpr long long kPad = 16;
    if (2 * b + 1 <= kFullScanWidth || p.degree() < 1) return {{-b, b}};

    std::vector<long long> centers;
    try {
        RootFindConfig cfg;
        cfg.seed = 0x5eed5eedULL;
        for (const auto& r : complex_roots(p, cfg)) {
            double re = r.real();
            if (re < static_cast<double>(-b)) re = static_cast<double>(-b);
            if (re > static_cast<double>(b)) re = static_cast<double>(b);
            centers.push_back(std::llround(re));
        }
    } catch (const numeric_failure&) {
        return {{-b, b}};  // pruning is best-effort; fall back to exact full scan
    }
    std::sort(centers.begin(), centers.end());
    centers.erase(std::unique(centers.begin(), centers.end()), centers.end());

    // Windows around root estimates always get scanned.
    Segments windows;
    for (long long c : centers) {
        long long lo = std::max(-b, c - kPad);
        long long hi = std::min(b, c + kPad);
        if (lo > hi) continue;
        if (!windows.empty() && lo <= windows.back().second + 1)
            windows.back().second = std::max(windows.back().second, hi);
        else
            windows.emplace_back(lo, hi);
    }
    if (windows.empty()) windows.emplace_back(-b, std::min(b, -b + kPad));

    // Gaps between windows are sign-constant; keep those where p >= 0,
    // deciding by exact evaluation at the endpoints and midpoint.
    Segments out;
    long long cursor = -b;
    auto consider_gap = [&](long long lo, long long hi) {
        if (lo > hi) return;
        const long long mid = lo + (hi - lo) / 2;
        bool keep = false;
        for (long long y : {lo, mid, hi}) {
            if (sgn(p.eval(Int(static_cast<long>(y)))) >= 0) {
                keep = true;
                break;
            }
        }
        if (keep) out.emplace_back(lo, hi);
    };
    for (const auto& w : windows) {
        consider_gap(cursor, w.first - 1);
        out.emplace_back(w.first, w.second);
        cursor = w.second + 1;
    }
    consider_gap(cursor, b);
    return out;
}

void scan_segment_i128(const std::vector<i128>& coeffs, long long lo, long long hi,
                       const SquareScanCallbacks& cb) {
    for (long long y = lo; y <= hi; ++y) {
        i128 v = 0;
        for (size_t k = coeffs.size(); k-- > 0;) v = v * y + coeffs[k];
        if (v < 0) continue;
        if (v == 0) {
            if (cb.on_zero) cb.on_zero(y);
            continue;
        }
        u128 root;
        if (u128_perfect_square(static_cast<u128>(v), &root) && cb.on_square)
            cb.on_square(y, u128_to_int(root));
    }
}

void scan_segment_mpz(const IntPoly& p, long long lo, long long hi,
                      const SquareScanCallbacks& cb) {
    for (long long y = lo; y <= hi; ++y) {
        Int v = p.eval(Int(static_cast<long>(y)));
        const int s = sgn(v);
        if (s < 0) continue;
        if (s == 0) {
            if (cb.on_zero) cb.on_zero(y);
            continue;
        }
        if (auto root = is_square_int(v); root && cb.on_square) cb.on_square(y, *root);
    }
}

}  // namespace

void scan_square_values(const IntPoly& p, long long b, const SquareScanCallbacks& cb) {
    if (p.is_zero()) throw std::domain_error("scan_square_values: zero polynomial");
    if (b < 0) throw std::domain_error("scan_square_values: negative bound");

    // Magnitude bound sum |c_i| b^i decides whether int128 evaluation is safe.
    Int mag = 0;
    Int pw = 1;
    for (int i = 0; i <= p.degree(); ++i) {
        mag += abs(p.coeff(i)) * pw;
        pw *= Int(static_cast<long>(b > 1 ? b : 1));
    }
    const bool fits_i128 = mpz_sizeinbase(mag.get_mpz_t(), 2) <= 120;

    const Segments segs = candidate_segments(p, b);
    if (fits_i128) {
        std::vector<i128> coeffs(static_cast<size_t>(p.degree() + 1));
        for (int i = 0; i <= p.degree(); ++i) {
            const Int& c = p.coeff(i);
            Int a = abs(c);
            i128 v = static_cast<i128>(mpz_get_ui(a.get_mpz_t()));
            if (mpz_sizeinbase(a.get_mpz_t(), 2) > 64) {
                Int hi = a >> 64;
                v = (static_cast<i128>(mpz_get_ui(hi.get_mpz_t())) << 64) | v;
            }
            coeffs[static_cast<size_t>(i)] = sgn(c) < 0 ? -v : v;
        }
        for (const auto& [lo, hi] : segs) scan_segment_i128(coeffs, lo, hi, cb);
    } else {
        for (const auto& [lo, hi] : segs) scan_segment_mpz(p, lo, hi, cb);
    }
}

std::string BoxConst::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

BoxConst BoxConst::parse(const std::string& text) {
    BoxConst c;
    size_t slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            c.num = std::stol(text.substr(0, slash));
            c.den = std::stol(text.substr(slash + 1));
        } else if (text.find('.') != std::string::npos) {
            // Decimal literal as an exact fraction over a power of ten.
            size_t dot = text.find('.');
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            c.num = std::stol(digits);
            c.den = 1;
            for (size_t i = dot + 1; i < text.size(); ++i) c.den *= 10;
        } else {
            c.num = std::stol(text);
            c.den = 1;
        }
    } catch (const std::exception&) {
        throw std::domain_error("invalid box constant: " + text);
    }
    if (c.num <= 0 || c.den <= 0)
        throw std::domain_error("box constant must be positive: " + text);
    return c;
}

long long floor_c_root_pow(const BoxConst& c, long long x, int j, int two_q) {
    if (x <= 0) throw std::domain_error("floor_c_root_pow: X must be positive");
    // B = floor(c x^{j/two_q}): largest B with (B den)^{two_q} <= num^{two_q} x^j.
    Int rhs;
    mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(c.num),
                  static_cast<unsigned long>(two_q));
    Int xp;
    mpz_ui_pow_ui(xp.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(j));
    rhs *= xp;
    Int root;
    mpz_root(root.get_mpz_t(), rhs.get_mpz_t(), static_cast<unsigned long>(two_q));
    Int b = root / c.den;
    if (!b.fits_slong_p()) throw std::overflow_error("box bound exceeds machine range");
    return b.get_si();
}

SearchBox make_search_box(int n, long long x, const BoxConst& c) {
    if (n < 3) throw std::domain_error("search box requires n >= 3");
    SearchBox box;
    box.n = n;
    box.x = x;
    box.c = c;
    for (int j = 2; j <= n; ++j) box.bounds.push_back(floor_c_root_pow(c, x, j, 2 * (n - 1)));
    box.d_bound = floor_c_root_pow(c, x, n, 4);
    return box;
}

Int SearchBox::tuple_count() const {
    Int total = 1;
    for (long long b : bounds) total *= Int(static_cast<long>(2 * b + 1));
    return total;
}

void for_each_tuple(const SearchBox& box, long long a2_lo, long long a2_hi,
                    const std::function<void(const std::vector<long long>&)>& visit) {
    a2_lo = std::max(a2_lo, -box.bound_for(2));
    a2_hi = std::min(a2_hi, box.bound_for(2));
    const size_t m = box.bounds.size();
    std::vector<long long> tuple(m);
    for (long long a2 = a2_lo; a2 <= a2_hi; ++a2) {
        tuple[0] = a2;
        // Odometer over the remaining coordinates, most significant first.
        for (size_t i = 1; i < m; ++i) tuple[i] = -box.bounds[i];
        for (;;) {
            visit(tuple);
            size_t i = m;
            while (i-- > 1) {
                if (tuple[i] < box.bounds[i]) {
                    ++tuple[i];
                    break;
                }
                tuple[i] = -box.bounds[i];
            }
            if (i == 0 || m == 1) break;
        }
    }
}

std::uint64_t cyclic_cubic_oracle(long long x) {
    if (x < 0) return 0;
    std::uint64_t total = 0;
    const long long fmax = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    for (long long f = 7; f <= fmax; ++f) {
        if (Int(static_cast<long>(f)) * static_cast<long>(f) > static_cast<long>(x)) continue;  // guard the float sqrt at the boundary
        long long rest = f;
        int omega = 0;
        bool valid = true;
        if (rest % 3 == 0) {
            if (rest % 9 != 0 || (rest / 9) % 3 == 0) {
                valid = false;
            } else {
                rest /= 9;
                ++omega;
            }
        }
        for (long long q = 2; valid && rest > 1; ++q) {
            if (q * q > rest) q = rest;
            if (rest % q != 0) continue;
            rest /= q;
            if (rest % q == 0 || q % 3 != 1) {
                valid = false;
                break;
            }
            ++omega;
        }
        if (valid && omega >= 1) total += std::uint64_t(1) << (omega - 1);
    }
    return total;
}

namespace {

struct Candidate {
    std::vector<Int> coeffs;  // a_2 .. a_n
    Int sqrt_disc;            // positive square root of the discriminant
};

bool candidate_less(const Candidate& a, const Candidate& b) {
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        const int c = cmp(a.coeffs[i], b.coeffs[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

struct ScanResult {
    std::vector<Candidate> candidates;
    std::uint64_t disc_zero = 0;
};

void scan_partition(const CensusConfig& cfg, const SearchBox& box, long long a2_lo,
                    long long a2_hi, ScanResult* out) {
    const int n = cfg.n;
    const size_t base_len = static_cast<size_t>(n - 2);

    // Iterate bases (a_2 .. a_{n-1}); the inner a_n loop is the square scan.
    std::vector<Int> base_coeffs(base_len);
    auto scan_base = [&](const std::vector<long long>& b) {
        for (size_t i = 0; i < base_len; ++i) base_coeffs[i] = static_cast<long>(b[i]);
        FiberBase fb(n, base_coeffs);
        const IntPoly p = fiber_disc_poly(fb);
        SquareScanCallbacks cb;
        cb.on_zero = [&](long long) { ++out->disc_zero; };
        cb.on_square = [&](long long y, const Int& d) {
            if (cmp(d, static_cast<long>(box.d_bound)) > 0) return;
            Candidate cand;
            cand.coeffs.reserve(base_len + 1);
            for (const Int& c : base_coeffs) cand.coeffs.push_back(c);
            cand.coeffs.push_back(Int(static_cast<long>(y)));
            cand.sqrt_disc = d;
            out->candidates.push_back(std::move(cand));
        };
        scan_square_values(p, box.bound_for(n), cb);
    };

    // Reuse the generic tuple odometer over the base coordinates by
    // building a base-only view of the box.
    SearchBox base_box = box;
    base_box.bounds.pop_back();
    for_each_tuple(base_box, a2_lo, a2_hi, scan_base);
}

size_t min_checkpoint_index(const std::vector<SearchBox>& boxes, const Candidate& cand) {
    for (size_t k = 0; k < boxes.size(); ++k) {
        const SearchBox& bx = boxes[k];
        bool inside = cmp(cand.sqrt_disc, static_cast<long>(bx.d_bound)) <= 0;
        for (size_t i = 0; inside && i < cand.coeffs.size(); ++i)
            inside = cmp(abs(cand.coeffs[i]), static_cast<long>(bx.bounds[i])) <= 0;
        if (inside) return k;
    }
    return boxes.size();  // unreachable for candidates produced by the scan
}

struct FieldClass {
    Int disc;  // discriminant of the first generator found
    std::vector<std::pair<long, CycleType>> fingerprint;
    std::vector<IntPoly> gens;
    size_t min_checkpoint = 0;
};

bool fingerprints_match(const std::vector<std::pair<long, CycleType>>& a,
                        const std::vector<std::pair<long, CycleType>>& b) {
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            ++i;
        } else if (a[i].first > b[j].first) {
            ++j;
        } else {
            if (!(a[i].second == b[j].second)) return false;
            ++i;
            ++j;
        }
    }
    return true;
}

}  // namespace

CensusSummary run_census(const CensusConfig& cfg) {
    if (cfg.n < 3) throw std::domain_error("census requires n >= 3");
    if (cfg.xmax < 1) throw std::domain_error("census requires xmax >= 1");
    if (!(cfg.grid_ratio > 1.0)) throw std::domain_error("grid ratio must exceed 1");
    if (cfg.partitions < 1) throw std::domain_error("partition count must be >= 1");

    CensusSummary summary;
    summary.config = cfg;

    // Geometric checkpoint grid, ascending, ending exactly at xmax.
    std::vector<long long> grid;
    for (double xv = static_cast<double>(cfg.xmax); xv >= 9.5; xv /= cfg.grid_ratio) {
        const long long xi = std::llround(xv);
        if (grid.empty() || xi < grid.back()) grid.push_back(xi);
    }
    std::reverse(grid.begin(), grid.end());

    std::vector<SearchBox> boxes;
    for (long long xk : grid) boxes.push_back(make_search_box(cfg.n, xk, cfg.c));
    const SearchBox& box = boxes.back();

    // Phase 1: scan, in partitions over a_2.
    std::vector<ScanResult> results(static_cast<size_t>(cfg.partitions));
    const long long b2 = box.bound_for(2);
    const long long width = 2 * b2 + 1;
    auto chunk_lo = [&](int k) { return -b2 + width * k / cfg.partitions; };
    if (cfg.partitions == 1) {
        scan_partition(cfg, box, -b2, b2, &results[0]);
    } else {
        std::vector<std::thread> workers;
        for (int k = 0; k < cfg.partitions; ++k)
            workers.emplace_back(scan_partition, std::cref(cfg), std::cref(box), chunk_lo(k),
                                 chunk_lo(k + 1) - 1, &results[static_cast<size_t>(k)]);
        for (auto& w : workers) w.join();
    }

    std::vector<Candidate> candidates;
    for (auto& r : results) {
        summary.diagnostics.disc_zero += r.disc_zero;
        std::move(r.candidates.begin(), r.candidates.end(), std::back_inserter(candidates));
    }
    std::sort(candidates.begin(), candidates.end(), candidate_less);

    // Phase 2: certify and dedup, sequential and order-deterministic.
    summary.checkpoints.resize(boxes.size());
    for (size_t k = 0; k < boxes.size(); ++k) summary.checkpoints[k].x = grid[k];

    std::vector<FieldClass> classes;
    for (const Candidate& cand : candidates) {
        const size_t k = min_checkpoint_index(boxes, cand);
        if (k >= boxes.size()) continue;
        ++summary.checkpoints[k].points_on_r;

        std::vector<Int> cs(cand.coeffs.size() + 2);
        cs[cs.size() - 1] = 1;  // t^n
        for (size_t i = 0; i < cand.coeffs.size(); ++i) cs[cand.coeffs.size() - 1 - i] = cand.coeffs[i];
        const IntPoly f(std::move(cs));
        const GaloisVerdict verdict = certify_an(f, cfg.prime_budget);
        if (verdict.kind == GaloisVerdict::Kind::Unknown) {
            ++summary.checkpoints[k].unknown_verdicts;
            continue;
        }
        if (verdict.kind == GaloisVerdict::Kind::CertifiedNotAn) {
            ++summary.diagnostics.certified_not_an;
            continue;
        }
        ++summary.checkpoints[k].an_polys;

        const Int disc = cand.sqrt_disc * cand.sqrt_disc;
        auto fp = field_fingerprint(f, cfg.fingerprint_primes);
        bool merged = false;
        for (FieldClass& cls : classes) {
            if (!is_square_int(disc * cls.disc)) continue;
            if (!fingerprints_match(fp, cls.fingerprint)) continue;
            cls.gens.push_back(f);
            cls.min_checkpoint = std::min(cls.min_checkpoint, k);
            merged = true;
            break;
        }
        if (!merged) classes.push_back(FieldClass{disc, std::move(fp), {f}, k});
    }

    // Field counts: for n = 3 attribute each class at the first checkpoint
    // whose bound covers its exact field discriminant (but never before a
    // generator is inside the box); otherwise at the first generator.
    const bool exact_mode = cfg.field_mode && cfg.n == 3;
    summary.field_disc_exact = exact_mode;
    for (const FieldClass& cls : classes) {
        size_t k = cls.min_checkpoint;
        if (exact_mode) {
            std::optional<Int> dk = field_disc_cubic(cls.gens);
            if (!dk) {
                ++summary.diagnostics.unresolved_field_discs;
                summary.field_disc_exact = false;
            } else {
                size_t kd = boxes.size();
                for (size_t i = 0; i < grid.size(); ++i) {
                    if (cmp(*dk, static_cast<long>(grid[i])) <= 0) {
                        kd = i;
                        break;
                    }
                }
                if (kd >= boxes.size()) continue;  // field discriminant beyond xmax
                k = std::max(k, kd);
            }
        }
        ++summary.checkpoints[k].fields;
    }

    // Counts are cumulative over nested boxes.
    for (size_t k = 1; k < summary.checkpoints.size(); ++k) {
        summary.checkpoints[k].points_on_r += summary.checkpoints[k - 1].points_on_r;
        summary.checkpoints[k].an_polys += summary.checkpoints[k - 1].an_polys;
        summary.checkpoints[k].fields += summary.checkpoints[k - 1].fields;
        summary.checkpoints[k].unknown_verdicts += summary.checkpoints[k - 1].unknown_verdicts;
    }
    return summary;
}

}  // namespace ancensus
