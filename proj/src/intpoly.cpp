#include "ancensus/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace ancensus {

namespace {
const Int kZero(0);
}

IntPoly::IntPoly(std::initializer_list<long> coeffs_low_first) {
    coeffs_.reserve(coeffs_low_first.size());
    for (long c : coeffs_low_first) coeffs_.emplace_back(c);
    normalize();
}

IntPoly::IntPoly(std::vector<Int> coeffs_low_first) : coeffs_(std::move(coeffs_low_first)) {
    normalize();
}

IntPoly IntPoly::monomial(int deg, Int coeff) {
    if (deg < 0) throw std::domain_error("monomial: negative degree");
    std::vector<Int> c(static_cast<size_t>(deg) + 1, Int(0));
    c.back() = std::move(coeff);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::constant(Int c) {
    std::vector<Int> v;
    v.push_back(std::move(c));
    return IntPoly(std::move(v));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

const Int& IntPoly::lc() const {
    if (coeffs_.empty()) return kZero;
    return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const Int& k) const {
    if (k == 0) return IntPoly();
    std::vector<Int> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] * k;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return IntPoly();
    std::vector<Int> c(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * static_cast<long>(i);
    return IntPoly(std::move(c));
}

Int IntPoly::eval(const Int& x) const {
    Int acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += Rat(coeffs_[i]);
    }
    return acc;
}

IntPoly IntPoly::shift(const Int& k) const {
    // Synthetic division by (t - (-k)) applied repeatedly: Taylor shift.
    std::vector<Int> c = coeffs_;
    const int n = degree();
    for (int i = 0; i < n; ++i)
        for (int j = n - 1; j >= i; --j) c[static_cast<size_t>(j)] += k * c[static_cast<size_t>(j) + 1];
    return IntPoly(std::move(c));
}

Int IntPoly::content() const {
    Int g(0);
    for (const Int& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Int ct = content();
    std::vector<Int> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] / ct;
    return IntPoly(std::move(c));
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeff(i);
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

// Pseudo-remainder: lc(g)^{deg f - deg g + 1} * f mod g, all integral.
IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g) {
    IntPoly r = f;
    const int dg = g.degree();
    const Int& b = g.lc();
    int steps = f.degree() - dg + 1;
    while (!r.is_zero() && r.degree() >= dg) {
        IntPoly lead = IntPoly::monomial(r.degree() - dg, r.lc());
        r = r * b - lead * g;
        --steps;
    }
    if (steps > 0) {
        Int scale;
        mpz_pow_ui(scale.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(steps));
        r = r * scale;
    }
    return r;
}

Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace

Int resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() && g.is_zero()) throw std::domain_error("resultant: both polynomials zero");
    if (f.is_zero() || g.is_zero()) return Int(0);
    if (f.degree() == 0 && g.degree() == 0) return Int(1);
    if (f.degree() == 0) return int_pow(f.lc(), static_cast<unsigned long>(g.degree()));
    if (g.degree() == 0) return int_pow(g.lc(), static_cast<unsigned long>(f.degree()));

    IntPoly a = f, b = g;
    int sign = 1;
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) sign = -sign;
        std::swap(a, b);
    }
    // Subresultant PRS (Cohen, Alg. 3.3.7). Keeps intermediates integral.
    Int ga(1), h(1);
    for (;;) {
        const int da = a.degree(), db = b.degree();
        const int d = da - db;
        if ((da & 1) && (db & 1)) sign = -sign;
        IntPoly r = pseudo_rem(a, b);
        a = b;
        Int divisor = ga * int_pow(h, static_cast<unsigned long>(d));
        {
            std::vector<Int> c(r.coeffs());
            for (Int& x : c) {
                Int q, rem;
                mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), divisor.get_mpz_t());
                if (rem != 0) throw std::logic_error("resultant: inexact subresultant division");
                x = q;
            }
            b = IntPoly(std::move(c));
        }
        ga = a.lc();
        if (d == 0) {
            // h unchanged only when h^{1-d} = h; d == 0 gives h = h / ga^0 ... still h.
            // Cohen: h = h^{1-d} ga^d = h.
        } else {
            // h = ga^d / h^{d-1}, exact.
            Int num = int_pow(ga, static_cast<unsigned long>(d));
            Int den = int_pow(h, static_cast<unsigned long>(d - 1));
            Int q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (rem != 0) throw std::logic_error("resultant: inexact h update");
            h = q;
        }
        if (b.is_zero()) return Int(0);
        if (b.degree() == 0) {
            // Res = h^{1-da'} * lc(b)^{da'} with da' = deg a at this point.
            const int dap = a.degree();
            Int num = int_pow(b.lc(), static_cast<unsigned long>(dap));
            Int den = int_pow(h, static_cast<unsigned long>(dap - 1));
            Int q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (rem != 0) throw std::logic_error("resultant: inexact final division");
            return sign > 0 ? q : Int(-q);
        }
    }
}

Int discriminant(const IntPoly& f) {
    const int n = f.degree();
    if (n < 2) throw std::domain_error("discriminant: degree must be >= 2");
    Int res = resultant(f, f.derivative());
    Int q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), res.get_mpz_t(), f.lc().get_mpz_t());
    if (rem != 0) throw std::logic_error("discriminant: lc does not divide resultant");
    const long e = static_cast<long>(n) * (n - 1) / 2;
    return (e & 1) ? Int(-q) : q;
}

IntPoly poly_gcd(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() && g.is_zero()) return IntPoly();
    if (f.is_zero()) return g.lc() < 0 ? (-g).primitive_part() : g.primitive_part();
    if (g.is_zero()) return f.lc() < 0 ? (-f).primitive_part() : f.primitive_part();
    IntPoly a = f.primitive_part(), b = g.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPoly r = pseudo_rem(a, b).primitive_part();
        a = b;
        b = r;
    }
    Int cf = f.content(), cg = g.content(), cc;
    mpz_gcd(cc.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
    if (a.lc() < 0) a = -a;
    return a * cc;
}

bool try_exact_div(const IntPoly& f, const IntPoly& g, IntPoly* quot) {
    if (g.is_zero()) return false;
    if (f.is_zero()) {
        if (quot) *quot = IntPoly();
        return true;
    }
    if (f.degree() < g.degree()) return false;
    std::vector<Int> q(static_cast<size_t>(f.degree() - g.degree()) + 1, Int(0));
    IntPoly r = f;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        Int c, rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), r.lc().get_mpz_t(), g.lc().get_mpz_t());
        if (rem != 0) return false;
        const int k = r.degree() - g.degree();
        q[static_cast<size_t>(k)] = c;
        r = r - IntPoly::monomial(k, c) * g;
    }
    if (!r.is_zero()) return false;
    if (quot) *quot = IntPoly(std::move(q));
    return true;
}

IntPoly exact_div(const IntPoly& f, const IntPoly& g) {
    IntPoly q;
    if (!try_exact_div(f, g, &q)) throw std::domain_error("exact_div: not divisible");
    return q;
}

SquareFreeDecomp squarefree_decomposition(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_decomposition: zero polynomial");
    SquareFreeDecomp out;
    out.content = p.content();
    if (p.lc() < 0) out.content = -out.content;
    if (p.degree() == 0) return out;
    IntPoly f = p.primitive_part();
    if (f.lc() < 0) f = -f;

    // Yun over Z on a primitive positive-lc polynomial.
    IntPoly fp = f.derivative();
    IntPoly g = poly_gcd(f, fp);
    IntPoly w = exact_div(f, g);
    IntPoly y = exact_div(fp, g);
    IntPoly z = y - w.derivative();
    int mult = 1;
    while (w.degree() > 0) {
        IntPoly h = poly_gcd(w, z);
        if (h.degree() > 0) out.factors.emplace_back(h, mult);
        w = exact_div(w, h);
        y = exact_div(z, h);
        z = y - w.derivative();
        ++mult;
    }
    // A negative sign is absorbed by the first odd-multiplicity factor when
    // one exists, keeping the content positive in that case.
    if (out.content < 0) {
        for (auto& [factor, m] : out.factors) {
            if (m % 2 != 0) {
                factor = -factor;
                out.content = -out.content;
                break;
            }
        }
    }
    return out;
}

std::optional<std::pair<Int, IntPoly>> constant_times_square(const IntPoly& p) {
    SquareFreeDecomp d = squarefree_decomposition(p);
    IntPoly g = IntPoly::constant(Int(1));
    for (const auto& [factor, mult] : d.factors) {
        if (mult % 2 != 0) return std::nullopt;
        IntPoly pw = IntPoly::constant(Int(1));
        for (int i = 0; i < mult / 2; ++i) pw = pw * factor;
        g = g * pw;
    }
    return std::make_pair(d.content, g);
}

std::optional<Int> is_square_int(const Int& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

}  // namespace ancensus
