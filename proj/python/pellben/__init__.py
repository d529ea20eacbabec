"""Brahmagupta equation x^2 - D*y^2 = k over Z(sqrt(D)).

Exact orbit enumeration of norm classes, canonical orbit sequences by
second-order recurrence, and Benford / equidistribution statistics of
the resulting integer sequences.
"""

from ._pellben import (
    BenfordReport,
    CFExpansion,
    DigitStats,
    FundamentalUnit,
    OrbitFundamental,
    OrbitPartition,
    QuadInt,
    Radicand,
    SearchBox,
    Variant,
    associated,
    benford_report,
    cf_sqrt,
    check_characteristic_roots,
    classify,
    convergent,
    digit_frequencies,
    empirical_density,
    enumerate_norm_class,
    expected_prob,
    fundamental_unit,
    generate,
    interleave,
    is_perfect_square,
    isqrt,
    leading_digits,
    log10_mantissa,
    orbit_partition,
    search_bounds,
    second_digit_marginal,
    solutions_in_box,
    star_discrepancy,
)

__all__ = [
    "BenfordReport",
    "CFExpansion",
    "DigitStats",
    "FundamentalUnit",
    "OrbitFundamental",
    "OrbitPartition",
    "QuadInt",
    "Radicand",
    "SearchBox",
    "Variant",
    "associated",
    "benford_report",
    "cf_sqrt",
    "check_characteristic_roots",
    "classify",
    "convergent",
    "digit_frequencies",
    "empirical_density",
    "enumerate_norm_class",
    "expected_prob",
    "fundamental_unit",
    "generate",
    "interleave",
    "is_perfect_square",
    "isqrt",
    "leading_digits",
    "log10_mantissa",
    "orbit_partition",
    "search_bounds",
    "second_digit_marginal",
    "solutions_in_box",
    "star_discrepancy",
]

__version__ = "0.1.0"
