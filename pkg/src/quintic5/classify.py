"""Radicand form matching and the full per-radicand classification record.

The main theorem covers nine radicand shapes: six with ambiguous 5-class
rank 1 and three with rank 2. A shape constrains the exponent pattern of
some associate of the radicand, the residue of the radicand mod 25 (the
"gate": whether n is congruent to +-1, +-7 mod 25), and the residues of
the prime divisors mod 25. Radicands matching no shape get rank bounds
instead of a rank.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arith import PrimeFactorization, factorize
from .quintic import (
    FIFTH_POWERS_MOD25,
    FactoredRadicand,
    FormClass,
    NormIndicators,
    PrimeClass,
    RamificationProfile,
    ambiguous_rank,
    normalize,
    q_star,
    ramification_profile,
    rank_bounds,
    zeta_norm,
)

__all__ = [
    "Classification",
    "FormClass",
    "classify",
    "classify_radicand",
    "conjecture_match",
    "match_form",
    "predicted_rank",
]

# Residues mod 25 of q-type primes allowed next to an l-type prime in R2_2
# ("+-2, +-3, +-7 mod 25").
_R2_2_Q_RESIDUES = frozenset({2, 3, 7, 18, 22, 23})

# The +-7 residues mod 25.
_PM7_MOD25 = frozenset({7, 18})

# Shapes the cyclic-group conjecture covers (same patterns as these forms).
_CONJECTURE_FORMS = frozenset({FormClass.R1_1, FormClass.R1_3, FormClass.R1_6})

_RANK_BY_FORM = {
    FormClass.R1_1: 1,
    FormClass.R1_2: 1,
    FormClass.R1_3: 1,
    FormClass.R1_4: 1,
    FormClass.R1_5: 1,
    FormClass.R1_6: 1,
    FormClass.R2_1: 2,
    FormClass.R2_2: 2,
    FormClass.R2_3: 2,
}


def _match_associate(
    five_e: int,
    by_class: dict[PrimeClass, list[tuple[int, int]]],
    gate: bool,
) -> FormClass | None:
    """Match one associate's exponent pattern against the nine shapes.

    five_e is the exponent of 5 in the associate (0 when 5 does not divide
    it); by_class holds the (prime, exponent) pairs of the other primes;
    gate says whether the associate's value is +-1, +-7 mod 25. At most one
    shape can match: the shapes differ in the multiset of prime classes or
    in the gate, both of which are fixed across associates.
    """
    ls = by_class[PrimeClass.LType]
    ps = by_class[PrimeClass.PType]
    qs = by_class[PrimeClass.QType]

    if five_e:
        if ls or ps or qs:
            if gate:
                return None
            if len(qs) == 2 and not ls and not ps:
                # 5^e * q1^2 * q2, at least one of q1, q2 not +-7 mod 25.
                pair = sorted(qs, key=lambda pe: pe[1])
                if pair[0][1] == 1 and pair[1][1] == 2:
                    if any(q % 25 not in _PM7_MOD25 for q, _ in qs):
                        return FormClass.R1_1
                return None
            if len(ps) == 1 and not ls and not qs and ps[0][1] == 1:
                if ps[0][0] % 25 != 24:
                    return FormClass.R1_2
                return None
            if len(qs) == 1 and not ls and not ps and qs[0][1] == 1:
                if qs[0][0] % 25 in _PM7_MOD25:
                    return FormClass.R1_3
                return None
            if len(ls) == 1 and not ps and not qs and ls[0][1] == 1:
                if ls[0][0] % 25 != 1:
                    return FormClass.R2_1
                return None
        return None

    if not gate:
        return None
    if len(ps) == 1 and len(qs) == 1 and not ls and qs[0][1] == 1:
        if ps[0][0] % 25 != 24 and qs[0][0] % 25 not in _PM7_MOD25:
            return FormClass.R1_4
        return None
    if len(ps) == 1 and not ls and not qs:
        if ps[0][0] % 25 == 24:
            return FormClass.R1_5
        return None
    if len(qs) == 2 and not ls and not ps and min(e for _, e in qs) == 1:
        if all(q % 25 in _PM7_MOD25 for q, _ in qs):
            return FormClass.R1_6
        return None
    if len(ls) == 1 and len(qs) == 1 and not ps and qs[0][1] == 1:
        if qs[0][0] % 25 in _R2_2_Q_RESIDUES:
            return FormClass.R2_2
        return None
    if len(ls) == 1 and not ps and not qs:
        if ls[0][0] % 25 == 1:
            return FormClass.R2_3
        return None
    return None


def match_form(r: FactoredRadicand) -> tuple[FormClass, int | None]:
    """Match a normalized radicand against the nine covered shapes.

    Tries the four associates in order t = 1..4 and returns the first
    matching (form, t); (NotCovered, None) when nothing matches. All
    associates that match are collected first so the at-most-one-form
    exclusivity can be asserted rather than assumed.
    """
    matches = []
    for t in (1, 2, 3, 4):
        five_e = 0
        value_mod25 = 1
        by_class = {PrimeClass.LType: [], PrimeClass.PType: [], PrimeClass.QType: []}
        for (p, e), cls in zip(r.factors, r.classes):
            scaled = t * e % 5
            value_mod25 = value_mod25 * pow(p, scaled, 25) % 25
            if cls is PrimeClass.Five:
                five_e = scaled
            else:
                by_class[cls].append((p, scaled))
        gate = value_mod25 in FIFTH_POWERS_MOD25
        form = _match_associate(five_e, by_class, gate)
        if form is not None:
            matches.append((form, t))
    assert len({form for form, _ in matches}) <= 1, (
        f"radicand {r.n} matches several shapes: {matches}"
    )
    if matches:
        return matches[0]
    return (FormClass.NotCovered, None)


def predicted_rank(form: FormClass) -> int | None:
    """Rank asserted by the covered shape: 1, 2, or None when not covered."""
    return _RANK_BY_FORM.get(form)


def conjecture_match(r: FactoredRadicand) -> bool:
    """Whether r has one of the shapes conjectured to give a cyclic 5-class
    group of order 5 (the same patterns as R1_6, R1_3 and R1_1)."""
    form, _ = match_form(r)
    return form in _CONJECTURE_FORMS


@dataclass(frozen=True)
class Classification:
    """Everything the library can say about one radicand.

    n is the caller's input; radicand is the canonical associate actually
    classified. associate_t, predicted_rank and q_star are None exactly
    when form is NotCovered, in which case rank_bounds carries the
    (low, high) range the rank formula still allows.
    """

    n: int
    radicand: FactoredRadicand
    form: FormClass
    associate_t: int | None
    predicted_rank: int | None
    conjecture_cyclic: bool
    profile: RamificationProfile
    indicators: NormIndicators
    rank_bounds: tuple[int, int] | None

    def as_json_dict(self) -> dict:
        """Stable machine-readable record (the CLI's JSON surface)."""
        record = {
            "n": self.n,
            "canonical_n": self.radicand.n,
            "form": self.form.value,
            "predicted_rank": self.predicted_rank,
            "d": self.profile.d,
            "q_star": self.indicators.q_star,
            "zeta_norm": self.indicators.zeta_is_norm,
            "lambda_ramified": self.profile.lambda_ramified,
            "conjecture_cyclic": self.conjecture_cyclic,
            "associate_t": self.associate_t,
        }
        if self.rank_bounds is not None:
            record["rank_bounds"] = list(self.rank_bounds)
        return record


def _finish(n: int, canon: FactoredRadicand) -> Classification:
    """Assemble the record for an already-normalized radicand."""
    form, t = match_form(canon)
    profile = ramification_profile(canon)
    zeta = zeta_norm(canon)
    qs = q_star(form)
    rank = predicted_rank(form)
    if form is FormClass.NotCovered:
        bounds = rank_bounds(profile, zeta)
    else:
        bounds = None
        # The theorem's rank must agree with d - 3 + q* for the matched form.
        assert ambiguous_rank(profile.d, qs) == rank, (
            f"rank formula mismatch for {canon.n}: d={profile.d}, q*={qs}, form={form}"
        )
        if qs == 2:
            assert zeta, f"q*=2 without zeta_5 a norm for {canon.n}"
    return Classification(
        n=n,
        radicand=canon,
        form=form,
        associate_t=t,
        predicted_rank=rank,
        conjecture_cyclic=form in _CONJECTURE_FORMS,
        profile=profile,
        indicators=NormIndicators(zeta_is_norm=zeta, q_star=qs),
        rank_bounds=bounds,
    )


def classify(n: int) -> Classification:
    """Classify a plain integer radicand (factorized by trial division)."""
    return _finish(n, normalize(factorize(n)))


def classify_radicand(r) -> Classification:
    """Classify an already-factored radicand.

    Accepts a FactoredRadicand, a PrimeFactorization, or raw (prime,
    exponent) pairs; exponents need not be reduced. The enumeration layer
    uses this to avoid refactorizing values it sieved.
    """
    if isinstance(r, FactoredRadicand):
        n = r.n
    elif isinstance(r, PrimeFactorization):
        n = r.n
    else:
        r = tuple(r)
        n = 1
        for p, e in r:
            n *= p**e
    return _finish(n, normalize(r))
