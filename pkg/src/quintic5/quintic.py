"""Splitting and ramification data for pure quintic fields.

For a 5th-power-free radicand n, the field Q(5th-root of n) has normal
closure k = Q(5th-root of n, zeta_5), a Kummer extension of degree 5 over
the cyclotomic field k0 = Q(zeta_5). Everything the rank prediction needs
is elementary data about n:

* how each prime divisor of n splits in k0 (decided by its residue mod 5),
* whether the prime above 5 in k0 ramifies in k (decided by n mod 25),
* which primes obstruct zeta_5 from being a norm from k to k0 (mod 25).

The rank of the group of ambiguous 5-classes of k is then d - 3 + q*,
where d counts ramified primes of k0 and q* in {0, 1, 2} measures which
cyclotomic units survive as norms.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .arith import PrimeFactorization, is_prime


class PrimeClass(Enum):
    """Behavior of a rational prime in the field of fifth roots of unity."""

    Five = "Five"  # the ramified prime
    LType = "LType"  # 1 mod 5: splits into four primes (f=1, g=4)
    PType = "PType"  # -1 mod 5: splits into two primes (f=2, g=2)
    QType = "QType"  # +-2 mod 5: stays inert (f=4, g=1)


# (residue degree f, number of primes above g) per class.
_SPLITTING = {
    PrimeClass.LType: (1, 4),
    PrimeClass.PType: (2, 2),
    PrimeClass.QType: (4, 1),
}

_CLASS_BY_RESIDUE = {
    0: PrimeClass.Five,
    1: PrimeClass.LType,
    4: PrimeClass.PType,
    2: PrimeClass.QType,
    3: PrimeClass.QType,
}

# The fifth powers among units mod 25 (equivalently the residues of order
# dividing 4), classically written +-1, +-7. n mod 25 lands here exactly
# when the prime above 5 does NOT ramify in the Kummer extension.
FIFTH_POWERS_MOD25 = frozenset({1, 7, 18, 24})

# Residues mod 25 under which a prime poses no obstruction to zeta_5 being
# a norm, per class; equivalent to p^f = 1 (mod 25).
_NORM_RESIDUES_MOD25 = {
    PrimeClass.LType: frozenset({1}),
    PrimeClass.PType: frozenset({24}),
    PrimeClass.QType: frozenset({7, 18}),
}


class FormClass(Enum):
    """The nine covered radicand shapes, six of rank 1 and three of rank 2."""

    R1_1 = "R1_1"  # 5^e * q1^2 * q2, gate fails, q1 or q2 not +-7 mod 25
    R1_2 = "R1_2"  # 5^e * p, gate fails, p not -1 mod 25
    R1_3 = "R1_3"  # 5^e * q1, gate fails, q1 = +-7 mod 25
    R1_4 = "R1_4"  # p^e * q1, gate holds, p not -1, q1 not +-7 mod 25
    R1_5 = "R1_5"  # p^e, gate holds, p = -1 mod 25
    R1_6 = "R1_6"  # q1^e1 * q2, gate holds, both = +-7 mod 25
    R2_1 = "R2_1"  # 5^e * l, gate fails, l not 1 mod 25
    R2_2 = "R2_2"  # l^e1 * q1, gate holds, q1 = +-2, +-3, +-7 mod 25
    R2_3 = "R2_3"  # l^e1, gate holds, l = 1 mod 25
    NotCovered = "NotCovered"


# q* per matched form, read off the case analysis behind the main theorem.
_Q_STAR = {
    FormClass.R1_1: 1,
    FormClass.R1_2: 1,
    FormClass.R1_3: 2,
    FormClass.R1_4: 1,
    FormClass.R1_5: 2,
    FormClass.R1_6: 2,
    FormClass.R2_1: 0,
    FormClass.R2_2: 0,
    FormClass.R2_3: 1,
}


class DegenerateRadicandError(ValueError):
    """Raised when a radicand reduces to a perfect fifth power."""


@dataclass(frozen=True)
class FactoredRadicand:
    """A 5th-power-free radicand with its factorization and prime classes.

    factors has strictly increasing primes and exponents in {1, 2, 3, 4};
    classes[i] is the class of factors[i][0]; n_mod25 = n % 25.
    """

    n: int
    factors: tuple[tuple[int, int], ...]
    classes: tuple[PrimeClass, ...]
    n_mod25: int


@dataclass(frozen=True)
class RamificationProfile:
    """Ramification of k0-primes in k/k0 for a given radicand.

    entries lists (prime, f, g) for each prime divisor other than 5; d is
    the total count of ramified primes of k0: the sum of the g values plus
    one more when the prime above 5 ramifies.
    """

    entries: tuple[tuple[int, int, int], ...]
    lambda_ramified: bool
    d: int


@dataclass(frozen=True)
class NormIndicators:
    """Norm status of zeta_5 plus the unit-norm index q* of a matched form.

    q_star is None when the radicand matches no covered form.
    """

    zeta_is_norm: bool
    q_star: int | None


def classify_prime(p: int) -> PrimeClass:
    """Class of a prime by its residue mod 5."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return _CLASS_BY_RESIDUE[p % 5]


def splitting(p: int) -> tuple[int, int]:
    """(f, g) for a prime p != 5 in the field of fifth roots of unity."""
    cls = classify_prime(p)
    if cls is PrimeClass.Five:
        raise ValueError("5 ramifies; it has no (f, g) splitting type")
    return _SPLITTING[cls]


def _as_pairs(r) -> list[tuple[int, int]]:
    """Coerce input to merged, validated (prime, exponent) pairs.

    PrimeFactorization and FactoredRadicand are trusted; raw iterables of
    pairs are checked (primality, positive exponents) and merged.
    """
    if isinstance(r, FactoredRadicand):
        return list(r.factors)
    if isinstance(r, PrimeFactorization):
        return list(r.factors)
    merged: dict[int, int] = {}
    for p, e in r:
        if e < 0:
            raise ValueError(f"negative exponent {e} for prime {p}")
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        merged[p] = merged.get(p, 0) + e
    return sorted(merged.items())


def _build_radicand(pairs: list[tuple[int, int]]) -> FactoredRadicand:
    n = 1
    for p, e in pairs:
        n *= p**e
    classes = tuple(_CLASS_BY_RESIDUE[p % 5] for p, _ in pairs)
    return FactoredRadicand(n, tuple(pairs), classes, n % 25)


def associate_value(pairs, t: int) -> int:
    """Value of the t-th associate radicand: exponents scaled by t mod 5."""
    v = 1
    for p, e in pairs:
        v *= p ** (t * e % 5)
    return v


def normalize(r) -> FactoredRadicand:
    """Canonical radicand for the field cut out by r.

    Reduces exponents mod 5 and drops dead primes; raises
    DegenerateRadicandError when nothing is left (a perfect fifth power).
    The four radicands with exponent vectors scaled by t = 1..4 generate
    the same field; the numerically smallest one is the canonical choice.
    """
    pairs = [(p, e % 5) for p, e in _as_pairs(r)]
    pairs = [(p, e) for p, e in pairs if e]
    if not pairs:
        raise DegenerateRadicandError("degenerate radicand: a perfect fifth power")
    best_t = 1
    best_v = associate_value(pairs, 1)
    for t in (2, 3, 4):
        v = associate_value(pairs, t)
        if v < best_v:
            best_v, best_t = v, t
    return _build_radicand([(p, best_t * e % 5) for p, e in pairs])


def lambda_ramified(n_mod25: int) -> bool:
    """Whether the prime above 5 in k0 ramifies in k, from n mod 25."""
    return n_mod25 % 25 not in FIFTH_POWERS_MOD25


def ramification_profile(r: FactoredRadicand) -> RamificationProfile:
    """Count the primes of k0 that ramify in k/k0.

    Each prime divisor of n other than 5 contributes its g; the prime above
    5 contributes one more exactly when lambda_ramified(n mod 25), which
    subsumes the case 5 | n (multiples of 5 never land in the gate set).
    """
    entries = []
    d = 0
    for (p, _e), cls in zip(r.factors, r.classes):
        if cls is PrimeClass.Five:
            continue
        f, g = _SPLITTING[cls]
        entries.append((p, f, g))
        d += g
    lam = lambda_ramified(r.n_mod25)
    if lam:
        d += 1
    return RamificationProfile(tuple(entries), lam, d)


def zeta_norm(r: FactoredRadicand) -> bool:
    """Whether zeta_5 is a norm from k down to k0.

    Holds iff every prime divisor of n other than 5 sits in its class's
    no-obstruction residue set mod 25 (equivalently p^f = 1 mod 25):
    l = 1, p = -1, q = +-7 (mod 25). Vacuously true for powers of 5.
    """
    for (p, _e), cls in zip(r.factors, r.classes):
        if cls is PrimeClass.Five:
            continue
        if p % 25 not in _NORM_RESIDUES_MOD25[cls]:
            return False
    return True


def q_star(form: FormClass) -> int | None:
    """Unit-norm index of a matched form; None when not covered."""
    return _Q_STAR.get(form)


def ambiguous_rank(d: int, q_star: int | None) -> int:
    """Rank of the ambiguous 5-class group: d - 3 + q*."""
    if q_star is None:
        raise ValueError("indeterminate rank: q* is unknown for uncovered radicands")
    return d - 3 + q_star


def rank_bounds(profile: RamificationProfile, zeta_is_norm: bool) -> tuple[int, int]:
    """Bounds on the ambiguous rank when no covered form pins q* down.

    q* is at least 0 and at most 2, but can only reach 2 when zeta_5 is a
    norm, so: low = max(0, d - 3), high = d - 3 + (2 if zeta else 1).
    """
    low = max(0, profile.d - 3)
    high = profile.d - 3 + (2 if zeta_is_norm else 1)
    return (low, high)
