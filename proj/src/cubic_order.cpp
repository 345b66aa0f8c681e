#include "ancensus/cubic_order.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "ancensus/detail/fppoly.hpp"

namespace ancensus {

namespace {

using detail::FpPoly;
using detail::fp_divexact;
using detail::fp_gcd;
using detail::fp_lift;
using detail::fp_radical;
using detail::fp_reduce;
using u64 = std::uint64_t;
using Vec3 = std::array<Int, 3>;
using Mat3 = std::array<Vec3, 3>;
using RatV3 = std::array<Rat, 3>;

int valuation(Int x, const Int& q) {
    int v = 0;
    if (x == 0) throw std::domain_error("valuation of zero");
    while (mpz_divisible_p(x.get_mpz_t(), q.get_mpz_t())) {
        x /= q;
        ++v;
    }
    return v;
}

// Lattice in the cubic field, rows = basis in power coordinates / den.
struct Lattice {
    Int den{1};
    Mat3 m{};  // rows

    static Lattice identity() {
        Lattice l;
        for (int i = 0; i < 3; ++i) l.m[i][i] = 1;
        return l;
    }
};

// Row HNF of full-rank integer rows (>= 3 of them): unique upper
// triangular form with positive diagonal and reduced entries above.
Mat3 hnf_rows(std::vector<Vec3> rows) {
    int r = 0;
    for (int j = 0; j < 3; ++j) {
        for (;;) {
            int best = -1;
            for (int i = r; i < static_cast<int>(rows.size()); ++i) {
                if (rows[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0) continue;
                if (best < 0 ||
                    abs(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]) <
                        abs(rows[static_cast<size_t>(best)][static_cast<size_t>(j)]))
                    best = i;
            }
            if (best < 0) throw std::logic_error("hnf_rows: rank deficient");
            std::swap(rows[static_cast<size_t>(r)], rows[static_cast<size_t>(best)]);
            bool any = false;
            for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
                Int& pivot = rows[static_cast<size_t>(r)][static_cast<size_t>(j)];
                Int& cur = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (cur == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), cur.get_mpz_t(), pivot.get_mpz_t());
                for (int k = 0; k < 3; ++k)
                    rows[static_cast<size_t>(i)][static_cast<size_t>(k)] -=
                        q * rows[static_cast<size_t>(r)][static_cast<size_t>(k)];
                if (rows[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) any = true;
            }
            if (!any) break;
        }
        if (rows[static_cast<size_t>(r)][static_cast<size_t>(j)] < 0)
            for (int k = 0; k < 3; ++k) rows[static_cast<size_t>(r)][static_cast<size_t>(k)] *= -1;
        for (int i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), rows[static_cast<size_t>(i)][static_cast<size_t>(j)].get_mpz_t(),
                       rows[static_cast<size_t>(r)][static_cast<size_t>(j)].get_mpz_t());
            for (int k = 0; k < 3; ++k)
                rows[static_cast<size_t>(i)][static_cast<size_t>(k)] -=
                    q * rows[static_cast<size_t>(r)][static_cast<size_t>(k)];
        }
        ++r;
    }
    Mat3 out;
    for (int i = 0; i < 3; ++i) out[static_cast<size_t>(i)] = rows[static_cast<size_t>(i)];
    return out;
}

void normalize(Lattice& l) {
    std::vector<Vec3> rows(l.m.begin(), l.m.end());
    l.m = hnf_rows(std::move(rows));
    Int g = l.den;
    for (const auto& row : l.m)
        for (const auto& x : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1) {
        l.den /= g;
        for (auto& row : l.m)
            for (auto& x : row) x /= g;
    }
}

bool same_lattice(const Lattice& a, const Lattice& b) {
    if (a.den != b.den) return false;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (a.m[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
                b.m[static_cast<size_t>(i)][static_cast<size_t>(j)])
                return false;
    return true;
}

// Product in Q[t]/(f) of power-coordinate vectors, f monic cubic.
RatV3 field_mul(const RatV3& u, const RatV3& v, const IntPoly& f) {
    std::array<Rat, 5> c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            c[static_cast<size_t>(i + j)] += u[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
    // theta^3 = -(a2 theta^2 + a1 theta + a0), then theta^4.
    const Rat a0(f.coeff(0)), a1(f.coeff(1)), a2(f.coeff(2));
    for (int d = 4; d >= 3; --d) {
        Rat top = c[static_cast<size_t>(d)];
        c[static_cast<size_t>(d)] = 0;
        c[static_cast<size_t>(d - 1)] -= a2 * top;
        c[static_cast<size_t>(d - 2)] -= a1 * top;
        c[static_cast<size_t>(d - 3)] -= a0 * top;
    }
    return {c[0], c[1], c[2]};
}

Int det3(const Mat3& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
           a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Mat3 adj3(const Mat3& a) {
    Mat3 r;
    r[0][0] = a[1][1] * a[2][2] - a[1][2] * a[2][1];
    r[0][1] = a[0][2] * a[2][1] - a[0][1] * a[2][2];
    r[0][2] = a[0][1] * a[1][2] - a[0][2] * a[1][1];
    r[1][0] = a[1][2] * a[2][0] - a[1][0] * a[2][2];
    r[1][1] = a[0][0] * a[2][2] - a[0][2] * a[2][0];
    r[1][2] = a[0][2] * a[1][0] - a[0][0] * a[1][2];
    r[2][0] = a[1][0] * a[2][1] - a[1][1] * a[2][0];
    r[2][1] = a[0][1] * a[2][0] - a[0][0] * a[2][1];
    r[2][2] = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    return r;
}

// Kernel over F_p of the column action x -> A x, rows(A) x 3.
std::vector<std::array<u64, 3>> fp_kernel3(std::vector<std::array<u64, 3>> a, u64 p) {
    int rank = 0;
    std::array<int, 3> pivot_col{-1, -1, -1};
    for (int col = 0; col < 3 && rank < static_cast<int>(a.size()); ++col) {
        int piv = -1;
        for (int i = rank; i < static_cast<int>(a.size()); ++i)
            if (a[static_cast<size_t>(i)][static_cast<size_t>(col)] % p != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[static_cast<size_t>(rank)], a[static_cast<size_t>(piv)]);
        const u64 inv = detail::fp_inv(a[static_cast<size_t>(rank)][static_cast<size_t>(col)] % p, p);
        for (int k = 0; k < 3; ++k)
            a[static_cast<size_t>(rank)][static_cast<size_t>(k)] =
                (a[static_cast<size_t>(rank)][static_cast<size_t>(k)] % p) * inv % p;
        for (int i = 0; i < static_cast<int>(a.size()); ++i) {
            if (i == rank) continue;
            const u64 c = a[static_cast<size_t>(i)][static_cast<size_t>(col)] % p;
            if (c == 0) continue;
            for (int k = 0; k < 3; ++k) {
                const u64 sub = c * a[static_cast<size_t>(rank)][static_cast<size_t>(k)] % p;
                a[static_cast<size_t>(i)][static_cast<size_t>(k)] =
                    (a[static_cast<size_t>(i)][static_cast<size_t>(k)] % p + p - sub) % p;
            }
        }
        pivot_col[static_cast<size_t>(rank)] = col;
        ++rank;
    }
    std::vector<std::array<u64, 3>> kernel;
    for (int col = 0; col < 3; ++col) {
        bool is_pivot = false;
        for (int r = 0; r < rank; ++r)
            if (pivot_col[static_cast<size_t>(r)] == col) is_pivot = true;
        if (is_pivot) continue;
        std::array<u64, 3> v{0, 0, 0};
        v[static_cast<size_t>(col)] = 1;
        for (int r = 0; r < rank; ++r) {
            const int pc = pivot_col[static_cast<size_t>(r)];
            const u64 c = a[static_cast<size_t>(r)][static_cast<size_t>(col)] % p;
            v[static_cast<size_t>(pc)] = (p - c) % p;
        }
        kernel.push_back(v);
    }
    return kernel;
}

// Integer structure constants of the order: c[i][j] = coordinates of
// omega_i * omega_j in the order basis.
std::array<std::array<Vec3, 3>, 3> structure_constants(const Lattice& l, const IntPoly& f) {
    Mat3 adj = adj3(l.m);
    Int det = det3(l.m);
    std::array<std::array<Vec3, 3>, 3> c;
    for (int i = 0; i < 3; ++i) {
        RatV3 wi{Rat(l.m[static_cast<size_t>(i)][0], l.den), Rat(l.m[static_cast<size_t>(i)][1], l.den),
                 Rat(l.m[static_cast<size_t>(i)][2], l.den)};
        for (auto& x : wi) x.canonicalize();
        for (int j = 0; j < 3; ++j) {
            RatV3 wj{Rat(l.m[static_cast<size_t>(j)][0], l.den),
                     Rat(l.m[static_cast<size_t>(j)][1], l.den),
                     Rat(l.m[static_cast<size_t>(j)][2], l.den)};
            for (auto& x : wj) x.canonicalize();
            RatV3 prod = field_mul(wi, wj, f);
            // coords = prod * B^{-1} = prod * adj / det, then * den.
            for (int k = 0; k < 3; ++k) {
                Rat acc(0);
                for (int mcol = 0; mcol < 3; ++mcol)
                    acc += prod[static_cast<size_t>(mcol)] *
                           Rat(adj[static_cast<size_t>(mcol)][static_cast<size_t>(k)]);
                acc = acc * Rat(l.den) / Rat(det);
                acc.canonicalize();
                if (acc.get_den() != 1)
                    throw std::logic_error("structure_constants: basis does not span a ring");
                c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] = acc.get_num();
            }
        }
    }
    return c;
}

// One radical/multiplier-ring enlargement of the order at p.
Lattice round2_step(const IntPoly& f, const Lattice& l, long p) {
    const u64 up = static_cast<u64>(p);
    auto c = structure_constants(l, f);

    auto ring_mul = [&](const std::array<u64, 3>& x, const std::array<u64, 3>& y) {
        std::array<u64, 3> z{0, 0, 0};
        for (int i = 0; i < 3; ++i) {
            if (x[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; j < 3; ++j) {
                if (y[static_cast<size_t>(j)] == 0) continue;
                const u64 xy = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)] % up;
                for (int k = 0; k < 3; ++k) {
                    Int cc = c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] %
                             static_cast<long>(up);
                    long v = cc.get_si();
                    if (v < 0) v += static_cast<long>(up);
                    z[static_cast<size_t>(k)] =
                        (z[static_cast<size_t>(k)] + xy * static_cast<u64>(v)) % up;
                }
            }
        }
        return z;
    };

    // Coordinates of 1 in the order basis.
    std::array<u64, 3> one{};
    {
        Mat3 adj = adj3(l.m);
        Int det = det3(l.m);
        for (int k = 0; k < 3; ++k) {
            // (1,0,0) * adj / det * den
            Rat acc = Rat(adj[0][static_cast<size_t>(k)]) * Rat(l.den) / Rat(det);
            acc.canonicalize();
            if (acc.get_den() != 1) throw std::logic_error("round2_step: 1 not in order");
            Int r = acc.get_num() % static_cast<long>(up);
            long v = r.get_si();
            if (v < 0) v += static_cast<long>(up);
            one[static_cast<size_t>(k)] = static_cast<u64>(v);
        }
    }

    // Frobenius x -> x^(p^e) with p^e >= 3 is F_p-linear on O/pO.
    const int e = (p == 2) ? 2 : 1;
    std::vector<std::array<u64, 3>> frob_rows(3);  // row i = phi(omega_i)
    for (int i = 0; i < 3; ++i) {
        std::array<u64, 3> base{0, 0, 0};
        base[static_cast<size_t>(i)] = 1;
        std::array<u64, 3> acc = one;
        u64 exp = up;
        for (int t = 1; t < e; ++t) exp *= up;
        while (exp > 0) {
            if (exp & 1) acc = ring_mul(acc, base);
            base = ring_mul(base, base);
            exp >>= 1;
        }
        frob_rows[static_cast<size_t>(i)] = acc;
    }
    // Kernel of x -> x * Phi (x row vector): transpose to column action.
    std::vector<std::array<u64, 3>> frob_t(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            frob_t[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                frob_rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    std::vector<std::array<u64, 3>> rad = fp_kernel3(frob_t, up);

    // I_p = radical preimage: lattice spanned by p*O and radical lifts
    // (coordinates w.r.t. the order basis).
    std::vector<Vec3> ip_rows;
    for (int i = 0; i < 3; ++i) {
        Vec3 r{Int(0), Int(0), Int(0)};
        r[static_cast<size_t>(i)] = p;
        ip_rows.push_back(r);
    }
    for (const auto& v : rad)
        ip_rows.push_back(Vec3{Int(static_cast<long>(v[0])), Int(static_cast<long>(v[1])),
                               Int(static_cast<long>(v[2]))});
    Mat3 bip = hnf_rows(std::move(ip_rows));
    Mat3 bip_adj = adj3(bip);
    Int bip_det = det3(bip);

    // Multiplication-by-x must vanish on I_p / p I_p.
    std::vector<std::array<u64, 3>> cond;  // rows of the transposed condition matrix
    for (int j = 0; j < 3; ++j) {
        // N[i][k] = coords of omega_i * b_j; P = N * adj(bip) / det integral.
        Mat3 n;
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 3; ++k) {
                Int acc(0);
                for (int m = 0; m < 3; ++m)
                    acc += bip[static_cast<size_t>(j)][static_cast<size_t>(m)] *
                           c[static_cast<size_t>(i)][static_cast<size_t>(m)][static_cast<size_t>(k)];
                n[static_cast<size_t>(i)][static_cast<size_t>(k)] = acc;
            }
        for (int k = 0; k < 3; ++k) {
            std::array<u64, 3> row{};
            for (int i = 0; i < 3; ++i) {
                Int acc(0);
                for (int m = 0; m < 3; ++m)
                    acc += n[static_cast<size_t>(i)][static_cast<size_t>(m)] *
                           bip_adj[static_cast<size_t>(m)][static_cast<size_t>(k)];
                Int q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), acc.get_mpz_t(), bip_det.get_mpz_t());
                if (rem != 0) throw std::logic_error("round2_step: I_p not an ideal");
                Int r = q % static_cast<long>(up);
                long v = r.get_si();
                if (v < 0) v += static_cast<long>(up);
                row[static_cast<size_t>(i)] = static_cast<u64>(v);
            }
            cond.push_back(row);
        }
    }
    std::vector<std::array<u64, 3>> u_basis = fp_kernel3(cond, up);

    // O' = (1/p) * (lift of U + p*O), expressed back in power coordinates.
    std::vector<Vec3> new_rows;
    for (const auto& v : u_basis) {
        Vec3 coords{Int(static_cast<long>(v[0])), Int(static_cast<long>(v[1])),
                    Int(static_cast<long>(v[2]))};
        Vec3 pw{Int(0), Int(0), Int(0)};
        for (int k = 0; k < 3; ++k)
            for (int m = 0; m < 3; ++m)
                pw[static_cast<size_t>(k)] +=
                    coords[static_cast<size_t>(m)] * l.m[static_cast<size_t>(m)][static_cast<size_t>(k)];
        new_rows.push_back(pw);
    }
    for (int i = 0; i < 3; ++i) {
        Vec3 pw;
        for (int k = 0; k < 3; ++k) pw[static_cast<size_t>(k)] = l.m[static_cast<size_t>(i)][static_cast<size_t>(k)] * p;
        new_rows.push_back(pw);
    }
    Lattice out;
    out.den = l.den * p;
    out.m = hnf_rows(std::move(new_rows));
    normalize(out);
    return out;
}

}  // namespace

bool dedekind_p_maximal(const IntPoly& f, long p) {
    if (f.lc() != 1) throw std::domain_error("dedekind_p_maximal: f must be monic");
    const u64 up = static_cast<u64>(p);
    FpPoly fbar = fp_reduce(f, up);
    FpPoly g = fp_radical(fbar, up);
    FpPoly h = fp_divexact(fbar, g, up);
    IntPoly gh = fp_lift(g) * fp_lift(h) - f;
    std::vector<Int> fc(gh.coeffs());
    for (Int& x : fc) {
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), Int(p).get_mpz_t());
        if (rem != 0) throw std::logic_error("dedekind_p_maximal: gh - f not divisible by p");
        x = q;
    }
    FpPoly fb = fp_reduce(IntPoly(std::move(fc)), up);
    FpPoly d = fp_gcd(fp_gcd(fb, g, up), h, up);
    return d.size() == 1;
}

int cubic_field_disc_valuation(const IntPoly& f, long p) {
    if (f.degree() != 3 || f.lc() != 1)
        throw std::domain_error("cubic_field_disc_valuation: monic cubic required");
    const Int disc = discriminant(f);
    if (disc == 0) throw std::domain_error("cubic_field_disc_valuation: disc = 0");
    Lattice l = Lattice::identity();
    for (int guard = 0;; ++guard) {
        if (guard > 64) throw std::logic_error("cubic_field_disc_valuation: no stabilization");
        Lattice next = round2_step(f, l, p);
        if (same_lattice(next, l)) break;
        l = next;
    }
    // disc(O) = disc(f) * det(B)^2 with det(B) = det(m) / den^3.
    const Int q(p);
    const int v_disc = valuation(disc, q);
    const int v_num = valuation(det3(l.m), q);
    const int v_den = 3 * valuation(l.den, q);
    return v_disc + 2 * (v_num - v_den);
}

std::optional<Int> field_disc_cubic(const std::vector<IntPoly>& generators) {
    if (generators.empty()) throw std::domain_error("field_disc_cubic: empty class");
    struct Gen {
        IntPoly f;
        Int disc;
    };
    std::vector<Gen> gens;
    for (const IntPoly& f : generators) {
        if (f.degree() != 3 || f.lc() != 1)
            throw std::domain_error("field_disc_cubic: generators must be monic cubics");
        Int d = discriminant(f);
        if (d == 0 || !is_square_int(d))
            throw std::domain_error("field_disc_cubic: generator not certified A3");
        gens.push_back({f, d});
    }
    std::sort(gens.begin(), gens.end(), [](const Gen& a, const Gen& b) { return a.disc < b.disc; });

    Int d0 = *is_square_int(gens.front().disc);
    if (d0 > Int("1000000000000")) return std::nullopt;  // square part too large to factor here

    Int dk(1);
    Int rest = d0;
    for (long q = 2; rest > 1; ++q) {
        if (Int(q) * q > rest) {
            q = rest.get_si();  // rest is prime
        }
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(q))) continue;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(q)))
            rest /= static_cast<unsigned long>(q);
        // Resolve v_q(D_K) across the class.
        int v = -1;
        for (const Gen& g : gens) {
            const int vq = valuation(g.disc, Int(q));
            if (vq == 0) {
                v = 0;
                break;
            }
            if (dedekind_p_maximal(g.f, q)) {
                v = vq;
                break;
            }
        }
        if (v < 0) v = cubic_field_disc_valuation(gens.front().f, q);
        for (int i = 0; i < v; ++i) dk *= q;
    }
    return dk;
}

}  // namespace ancensus
