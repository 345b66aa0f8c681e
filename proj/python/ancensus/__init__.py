"""Exact-arithmetic census of alternating-group number field candidates."""

from ancensus._core import (
    certify_an,
    classify_fiber,
    count_fiber_points,
    cyclic_cubic_oracle,
    discriminant,
    fiber_disc_poly,
    field_disc_cubic,
    pila_bound_log10,
    run_census,
    same_field,
    scan_reducible_fibers,
    theorem_exponents,
)

__all__ = [
    "certify_an",
    "classify_fiber",
    "count_fiber_points",
    "cyclic_cubic_oracle",
    "discriminant",
    "fiber_disc_poly",
    "field_disc_cubic",
    "pila_bound_log10",
    "run_census",
    "same_field",
    "scan_reducible_fibers",
    "theorem_exponents",
]

__version__ = "0.1.0"
