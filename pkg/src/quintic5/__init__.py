"""Rank classifier for ambiguous 5-class groups of pure quintic fields.

Given a 5th-power-free radicand n, the normal closure k of the pure
quintic field defined by n is a Kummer extension of the field of fifth
roots of unity. This package decides, from congruence conditions on the
prime factorization of n alone, the rank (1 or 2) of the group of
ambiguous 5-ideal-classes of k whenever n matches one of nine covered
shapes, reproduces the published numerical tables behind that
classification from embedded fixtures, and flags the table rows that are
internally inconsistent.
"""

from .arith import (
    PrimeFactorization,
    cyclotomic_splitting_oracle,
    factorize,
    is_prime,
    mult_order_mod5,
)
from .classify import (
    Classification,
    classify,
    classify_radicand,
    conjecture_match,
    match_form,
    predicted_rank,
)
from .quintic import (
    FIFTH_POWERS_MOD25,
    DegenerateRadicandError,
    FactoredRadicand,
    FormClass,
    NormIndicators,
    PrimeClass,
    RamificationProfile,
    ambiguous_rank,
    associate_value,
    classify_prime,
    lambda_ramified,
    normalize,
    q_star,
    ramification_profile,
    rank_bounds,
    splitting,
    zeta_norm,
)
from .tables import (
    DiscrepancyReport,
    FixtureRow,
    StatedPrime,
    emit_table,
    enumerate_classified,
    load_fixtures,
    verify_fixtures,
)

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "DegenerateRadicandError",
    "DiscrepancyReport",
    "FIFTH_POWERS_MOD25",
    "FactoredRadicand",
    "FixtureRow",
    "FormClass",
    "NormIndicators",
    "PrimeClass",
    "PrimeFactorization",
    "RamificationProfile",
    "StatedPrime",
    "ambiguous_rank",
    "associate_value",
    "classify",
    "classify_prime",
    "classify_radicand",
    "conjecture_match",
    "cyclotomic_splitting_oracle",
    "emit_table",
    "enumerate_classified",
    "factorize",
    "is_prime",
    "lambda_ramified",
    "load_fixtures",
    "match_form",
    "mult_order_mod5",
    "normalize",
    "predicted_rank",
    "q_star",
    "ramification_profile",
    "rank_bounds",
    "splitting",
    "verify_fixtures",
    "zeta_norm",
]
