#include "ancensus/disc_fiber.hpp"

#include <cmath>
#include <stdexcept>

namespace ancensus {

FiberBase::FiberBase(int degree, std::vector<Int> a) : n(degree), coeffs(std::move(a)) {
    if (n < 3) throw std::domain_error("FiberBase: degree must be >= 3");
    if (static_cast<int>(coeffs.size()) != n - 2)
        throw std::domain_error("FiberBase: expected n-2 coefficients");
}

IntPoly trace_zero_poly(const FiberBase& base, const Int& constant_term) {
    std::vector<Int> c(static_cast<size_t>(base.n) + 1, Int(0));
    c[static_cast<size_t>(base.n)] = 1;
    for (int j = 2; j < base.n; ++j)
        c[static_cast<size_t>(base.n - j)] = base.coeffs[static_cast<size_t>(j - 2)];
    c[0] = constant_term;
    return IntPoly(std::move(c));
}

IntPoly fiber_q0(const FiberBase& base) { return trace_zero_poly(base, Int(0)); }

IntPoly fiber_disc_poly(const FiberBase& base) {
    const int n = base.n;
    // n exact samples pin down the unique polynomial of degree <= n-1.
    std::vector<Rat> nodes, divided;
    nodes.reserve(static_cast<size_t>(n));
    divided.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const Rat yk(k);
        // divided[j] = f[y_0..y_j]; extend with the new node.
        Rat cur(discriminant(trace_zero_poly(base, Int(k))));
        for (size_t j = 0; j < nodes.size(); ++j) cur = (cur - divided[j]) / (yk - nodes[j]);
        divided.push_back(cur);
        nodes.push_back(yk);
    }
    // Expand Newton form to monomial coefficients.
    std::vector<Rat> mono(static_cast<size_t>(n), Rat(0));
    for (int k = n - 1; k >= 0; --k) {
        // mono = mono * (y - nodes[k]) + divided[k]
        for (int i = n - 1; i >= 1; --i)
            mono[static_cast<size_t>(i)] =
                mono[static_cast<size_t>(i - 1)] - nodes[static_cast<size_t>(k)] * mono[static_cast<size_t>(i)];
        mono[0] = divided[static_cast<size_t>(k)] - nodes[static_cast<size_t>(k)] * mono[0];
    }
    std::vector<Int> coeffs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Rat c = mono[static_cast<size_t>(i)];
        c.canonicalize();
        if (c.get_den() != 1)
            throw std::logic_error("fiber_disc_poly: non-integer interpolated coefficient");
        coeffs[static_cast<size_t>(i)] = c.get_num();
    }
    return IntPoly(std::move(coeffs));
}

FiberCurve classify_fiber(const FiberBase& base) {
    FiberCurve fc;
    fc.base = base;
    fc.p = fiber_disc_poly(base);
    if (fc.p.is_zero()) {
        fc.geometrically_irreducible = false;
        return fc;
    }
    fc.square_witness = constant_times_square(fc.p);
    fc.geometrically_irreducible = !fc.square_witness.has_value();
    return fc;
}

CriticalValueSet critical_values(const FiberBase& base, const RootFindConfig& cfg) {
    CriticalValueSet cv;
    cv.q0 = fiber_q0(base);
    IntPoly dq = cv.q0.derivative();
    std::vector<std::complex<double>> thetas = complex_roots(dq, cfg);
    std::vector<double> qc(static_cast<size_t>(cv.q0.degree()) + 1);
    for (int i = 0; i <= cv.q0.degree(); ++i) qc[static_cast<size_t>(i)] = cv.q0.coeff(i).get_d();
    cv.values.reserve(thetas.size());
    for (const auto& th : thetas) {
        std::complex<double> acc(0.0, 0.0);
        for (size_t i = qc.size(); i-- > 0;) acc = acc * th + qc[i];
        cv.values.push_back(acc);
    }
    return cv;
}

bool verify_cv_factorization(const FiberBase& base, double tol, const RootFindConfig& cfg) {
    const int n = base.n;
    const IntPoly p = fiber_disc_poly(base);
    const CriticalValueSet cv = critical_values(base, cfg);

    // Expand prod (y + c_i) in floating point.
    std::vector<std::complex<double>> prod{std::complex<double>(1.0, 0.0)};
    for (const auto& c : cv.values) {
        std::vector<std::complex<double>> next(prod.size() + 1, std::complex<double>(0.0, 0.0));
        for (size_t i = 0; i < prod.size(); ++i) {
            next[i + 1] += prod[i];
            next[i] += prod[i] * c;
        }
        prod = std::move(next);
    }
    double lead = std::pow(static_cast<double>(n), n);
    const long e = static_cast<long>(n) * (n - 1) / 2;
    if (e & 1) lead = -lead;

    if (static_cast<int>(prod.size()) != n) return false;
    for (int i = 0; i < n; ++i) {
        const double expect = p.coeff(i).get_d();
        const std::complex<double> got = lead * prod[static_cast<size_t>(i)];
        const double scale = std::max({1.0, std::abs(expect), std::abs(lead)});
        if (std::abs(got.real() - expect) > tol * scale) return false;
        if (std::abs(got.imag()) > tol * scale) return false;
    }
    return true;
}

}  // namespace ancensus
