#ifndef ANCENSUS_CUBIC_ORDER_HPP
#define ANCENSUS_CUBIC_ORDER_HPP

#include <optional>
#include <vector>

#include "ancensus/intpoly.hpp"

namespace ancensus {

/// Dedekind's index criterion: true iff Z[theta] is p-maximal, where
/// theta is a root of the monic irreducible polynomial f.
bool dedekind_p_maximal(const IntPoly& f, long p);

/// Valuation v_p(disc O_K) for the cubic field Q[t]/(f), computed by
/// maximalizing Z[theta] at p (radical / multiplier-ring enlargement).
int cubic_field_disc_valuation(const IntPoly& f, long p);

/// Field discriminant of the cubic field generated by the given class of
/// certified-A3 generators (all defining the same field). Each prime in
/// the square part of a generator discriminant is resolved by Dedekind's
/// criterion across the generators, falling back to exact p-maximalization.
std::optional<Int> field_disc_cubic(const std::vector<IntPoly>& generators);

}  // namespace ancensus

#endif
