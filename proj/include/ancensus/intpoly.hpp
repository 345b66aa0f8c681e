#ifndef ANCENSUS_INTPOLY_HPP
#define ANCENSUS_INTPOLY_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ancensus {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients, stored lowest degree first. The zero polynomial has an
/// empty coefficient vector; otherwise the leading coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs_low_first);
    explicit IntPoly(std::vector<Int> coeffs_low_first);

    static IntPoly monomial(int deg, Int coeff = Int(1));
    static IntPoly constant(Int c);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // Coefficient of t^i; zero outside the stored range.
    const Int& coeff(int i) const;
    const Int& lc() const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& c) const;
    bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const IntPoly& o) const { return coeffs_ != o.coeffs_; }

    IntPoly derivative() const;
    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    // f(t + k), exact integer shift.
    IntPoly shift(const Int& k) const;

    // Positive gcd of the coefficients; content of the zero polynomial is 0.
    Int content() const;
    // p / content(p); sign of the leading coefficient is preserved.
    IntPoly primitive_part() const;

    std::string to_string(const std::string& var = "t") const;

private:
    void normalize();
    std::vector<Int> coeffs_;
};

/// Resultant of f and g by the fraction-free subresultant PRS.
/// Both zero -> domain error.
Int resultant(const IntPoly& f, const IntPoly& g);

/// (-1)^{n(n-1)/2} Res(f, f') / lc(f); requires deg f >= 2.
Int discriminant(const IntPoly& f);

/// Primitive gcd over Z, normalized to positive leading coefficient.
IntPoly poly_gcd(const IntPoly& f, const IntPoly& g);

/// Exact quotient f / g; throws std::domain_error if g does not divide f.
IntPoly exact_div(const IntPoly& f, const IntPoly& g);

/// True iff g divides f exactly; on success *quot receives the quotient.
bool try_exact_div(const IntPoly& f, const IntPoly& g, IntPoly* quot = nullptr);

struct SquareFreeDecomp {
    // input = content * prod factors[i].first ^ factors[i].second exactly.
    // content is positive unless every multiplicity is even and the input's
    // leading coefficient is negative.
    Int content;
    // Pairwise coprime square-free primitive factors with strictly positive
    // multiplicities; at most one factor (of odd multiplicity) has a
    // negative leading coefficient, absorbing the input's sign.
    std::vector<std::pair<IntPoly, int>> factors;
};

/// Yun's algorithm on the primitive part; p must be nonzero.
SquareFreeDecomp squarefree_decomposition(const IntPoly& p);

/// If p = c * g^2 with g primitive of positive leading coefficient,
/// returns (c, g); otherwise empty. p must be nonzero.
std::optional<std::pair<Int, IntPoly>> constant_times_square(const IntPoly& p);

/// Square root of n when n is a perfect square >= 0, otherwise empty.
std::optional<Int> is_square_int(const Int& n);

}  // namespace ancensus

#endif
