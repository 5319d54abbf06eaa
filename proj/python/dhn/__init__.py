"""Exact double Hurwitz numbers.

Thin python surface over the C++ core: partitions and symmetric-group
characters, four independent computation routes for H^g_{alpha,beta}, the
bracket symbol with its closed forms, and the verification suites.  All
values are exact `fractions.Fraction`s.
"""

from ._core import (
    InconsistencyError,
    PreconditionError,
    ResourceError,
    aut_order,
    bernoulli,
    character,
    closed_form_symbol,
    conjugacy_class_size,
    conjugate,
    diagonal,
    eta,
    f_coeff,
    genus0_mparts,
    hurwitz,
    hurwitz_disconnected,
    one_part,
    one_part_closed,
    partitions_of,
    ray_fit,
    shifted_power_sum,
    symbol_def,
    symbol_wittcor,
    two_two,
    v_coeff,
    verify_suite,
    xi_coeff,
)

__all__ = [
    "InconsistencyError",
    "PreconditionError",
    "ResourceError",
    "aut_order",
    "bernoulli",
    "character",
    "closed_form_symbol",
    "conjugacy_class_size",
    "conjugate",
    "diagonal",
    "eta",
    "f_coeff",
    "genus0_mparts",
    "hurwitz",
    "hurwitz_disconnected",
    "one_part",
    "one_part_closed",
    "partitions_of",
    "ray_fit",
    "shifted_power_sum",
    "symbol_def",
    "symbol_wittcor",
    "two_two",
    "v_coeff",
    "verify_suite",
    "xi_coeff",
]
