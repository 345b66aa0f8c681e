#ifndef ANCENSUS_DISC_FIBER_HPP
#define ANCENSUS_DISC_FIBER_HPP

#include <complex>
#include <optional>
#include <vector>

#include "ancensus/intpoly.hpp"
#include "ancensus/rootfind.hpp"

namespace ancensus {

/// Base point of the discriminant fibration: fixes the coefficients
/// (a_2, ..., a_{n-1}) of the monic trace-zero family
/// t^n + a_2 t^{n-2} + ... + a_{n-1} t + y.
struct FiberBase {
    int n = 0;
    std::vector<Int> coeffs;  // a_2 .. a_{n-1}, length n-2

    FiberBase() = default;
    FiberBase(int degree, std::vector<Int> a);
};

/// t^n + a_2 t^{n-2} + ... + a_{n-1} t + constant_term.
IntPoly trace_zero_poly(const FiberBase& base, const Int& constant_term);

/// q_0(t) = t^n + a_2 t^{n-2} + ... + a_{n-1} t (zero constant term).
IntPoly fiber_q0(const FiberBase& base);

/// p(y) = Disc_t(t^n + a_2 t^{n-2} + ... + a_{n-1} t + y), computed by
/// exact interpolation from n evaluations of the univariate discriminant.
/// Degree is always exactly n-1 with leading coefficient +-n^n.
IntPoly fiber_disc_poly(const FiberBase& base);

struct FiberCurve {
    FiberBase base;
    IntPoly p;  // fiber discriminant polynomial in y
    bool geometrically_irreducible = false;
    // Present iff p = c * g^2, the reducibility witness for x^2 = p(y).
    std::optional<std::pair<Int, IntPoly>> square_witness;
};

FiberCurve classify_fiber(const FiberBase& base);

struct CriticalValueSet {
    // q_0(theta) over roots theta of q_0', with multiplicity: n-1 values.
    std::vector<std::complex<double>> values;
    IntPoly q0;
};

/// Critical values of q_0, found by simultaneous iteration on q_0'.
CriticalValueSet critical_values(const FiberBase& base, const RootFindConfig& cfg = {});

/// Checks p(y) = (-1)^{n(n-1)/2} n^n prod_i (y + c_i) coefficientwise to
/// relative tolerance tol, where the c_i are the critical values of q_0.
/// (The roots of p are the critical values of -q_0, hence the + sign.)
bool verify_cv_factorization(const FiberBase& base, double tol, const RootFindConfig& cfg = {});

}  // namespace ancensus

#endif
