"""Reference tables, their verification, and bulk enumeration.

The package embeds nine published numerical tables (108 rows) verbatim in
data/reference_tables.tsv: stated primes with their printed mod-5/mod-25
residues, the printed radicand cell, and the reported 5-class number,
group type and rank. The verifier recomputes everything recomputable from
each row and reports one finding per internally inconsistent row; it never
corrects the stored data. The enumeration layer sieves a range, classifies
every 5th-power-free radicand once via its canonical associate, and can
re-emit any of the nine tables with the reported columns filled in from
matching fixture rows.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from importlib import resources
from math import isqrt

from .arith import factorize, is_prime
from .classify import Classification, _finish, classify_radicand
from .quintic import (
    FIFTH_POWERS_MOD25,
    FormClass,
    PrimeClass,
    _build_radicand,
    normalize,
)

__all__ = [
    "DiscrepancyReport",
    "FixtureRow",
    "StatedPrime",
    "enumerate_classified",
    "emit_table",
    "load_fixtures",
    "verify_fixtures",
]

# Table shapes whose radicand pattern starts with a power of 5.
_FORMS_WITH_FIVE = frozenset({"R1_1", "R1_2", "R1_3", "R2_1"})

# Table shapes requiring n = +-1, +-7 (mod 25); the others require the
# opposite (automatic when 5 | n, but checked all the same).
_FORMS_GATE_IN = frozenset({"R1_4", "R1_5", "R1_6", "R2_2", "R2_3"})

# Display column symbols per table, in published column order.
_SLOT_SYMBOLS = {
    FormClass.R1_1: ("q1", "q2"),
    FormClass.R1_2: ("p",),
    FormClass.R1_3: ("q1",),
    FormClass.R1_4: ("p", "q1"),
    FormClass.R1_5: ("p",),
    FormClass.R1_6: ("q1", "q2"),
    FormClass.R2_1: ("l",),
    FormClass.R2_2: ("l", "q1"),
    FormClass.R2_3: ("l",),
}

_BLOCK = 1 << 16


@dataclass(frozen=True)
class StatedPrime:
    """One stated prime column: symbol, value, and residues as printed."""

    symbol: str
    value: int
    mod5: str
    mod25: str


@dataclass(frozen=True)
class FixtureRow:
    """One published table row, stored verbatim (typos included)."""

    table_id: str
    row: int
    primes: tuple[StatedPrime, ...]
    n_cell: str
    h5: int
    group: str
    rank: int

    @property
    def label(self) -> str:
        parts = [f"{sp.symbol}={sp.value}" for sp in self.primes]
        parts.append(f"n={self.n_cell}")
        return ", ".join(parts)


@dataclass(frozen=True)
class DiscrepancyReport:
    """One machine-checkable inconsistency in a fixture row."""

    table_id: str
    row: int
    label: str
    kind: str
    evidence: dict


_FIXTURE_CACHE: tuple[FixtureRow, ...] | None = None


def load_fixtures() -> tuple[FixtureRow, ...]:
    """Parse and cache the embedded reference tables."""
    global _FIXTURE_CACHE
    if _FIXTURE_CACHE is None:
        text = (
            resources.files("quintic5")
            .joinpath("data/reference_tables.tsv")
            .read_text(encoding="utf-8")
        )
        rows = []
        reader = csv.DictReader(text.splitlines(), delimiter="\t")
        for rec in reader:
            primes = []
            for chunk in rec["primes"].split(";"):
                sym, value, m5, m25 = chunk.split(":")
                primes.append(StatedPrime(sym, int(value), m5, m25))
            rows.append(
                FixtureRow(
                    table_id=rec["form"],
                    row=int(rec["row"]),
                    primes=tuple(primes),
                    n_cell=rec["n"],
                    h5=int(rec["h5"]),
                    group=rec["group"],
                    rank=int(rec["rank"]),
                )
            )
        _FIXTURE_CACHE = tuple(rows)
    return _FIXTURE_CACHE


def _factor_string(pairs) -> str:
    return "x".join(f"{p}^{e}" if e > 1 else f"{p}" for p, e in pairs)


def _parse_n_cell(cell: str) -> tuple[int | None, list[tuple[int, int]] | None]:
    """Split a printed radicand cell into (stated value, printed pattern).

    Cells come in three shapes: "60=5x2^2x3" (value and factorization),
    "251^2" or "31x2" (factorization only), and "449" (bare value). The
    pattern's bases are display text; only the exponents and the position
    of the factor 5 are trusted downstream.
    """
    if "=" in cell:
        value_part, fact_part = cell.split("=", 1)
        return int(value_part), _parse_factors(fact_part)
    if "x" in cell or "^" in cell:
        return None, _parse_factors(cell)
    return int(cell), None


def _parse_factors(fact: str) -> list[tuple[int, int]]:
    slots = []
    for part in fact.split("x"):
        if "^" in part:
            base, exp = part.split("^")
            slots.append((int(base), int(exp)))
        else:
            slots.append((int(part), 1))
    return slots


def _analyze_row(row: FixtureRow):
    """Recompute one row from its stated columns, first failure wins.

    Returns (pairs, value, report): the effective factorization built from
    the stated prime columns and the printed exponent pattern, the
    effective radicand value, and the first inconsistency found (None for
    a confirmed row). pairs/value are None when the row is too broken to
    reconstruct (a composite stated prime or an unmatchable product).
    """

    def finding(kind: str, evidence: dict) -> DiscrepancyReport:
        return DiscrepancyReport(row.table_id, row.row, row.label, kind, evidence)

    # Stated primes must actually be prime.
    for sp in row.primes:
        if not is_prime(sp.value):
            evidence = {
                "symbol": sp.symbol,
                "stated_prime": sp.value,
                "factorization": _factor_string(factorize(sp.value).factors),
            }
            return None, None, finding("composite-stated-prime", evidence)

    # The printed value must equal the product of the stated primes raised
    # to the printed exponents (pattern bases are display text only).
    stated_value, slots = _parse_n_cell(row.n_cell)
    if slots is None:
        p = row.primes[0].value
        exp = next((e for e in (1, 2, 3, 4) if p**e == stated_value), None)
        if exp is None:
            evidence = {
                "stated_n": stated_value,
                "stated_prime": p,
                "detail": "value is not prime^e for any e in 1..4",
            }
            return None, None, finding("product-mismatch", evidence)
        pairs = [(p, exp)]
        value = stated_value
    else:
        idx = 0
        pairs = []
        if row.table_id in _FORMS_WITH_FIVE:
            base, exp = slots[0]
            assert base == 5, f"pattern for {row.label} should start with 5"
            pairs.append((5, exp))
            idx = 1
        assert len(slots) - idx == len(row.primes), f"slot count off in {row.label}"
        for sp, (_base, exp) in zip(row.primes, slots[idx:]):
            pairs.append((sp.value, exp))
        value = 1
        for p, e in pairs:
            value *= p**e
        if stated_value is not None and value != stated_value:
            evidence = {
                "stated_n": stated_value,
                "recomputed_n": value,
                "pattern": _factor_string(pairs),
            }
            return None, None, finding("product-mismatch", evidence)
        if stated_value is not None:
            value = stated_value

    # Printed residues must match the stated primes.
    for sp in row.primes:
        for column, stated, modulus in (
            ("mod5", sp.mod5, 5),
            ("mod25", sp.mod25, 25),
        ):
            actual = sp.value % modulus
            if int(stated) % modulus != actual:
                evidence = {
                    "symbol": sp.symbol,
                    "prime": sp.value,
                    "column": column,
                    "stated": int(stated),
                    "actual": actual,
                }
                return pairs, value, finding("residue-mismatch", evidence)

    # The radicand must sit on the right side of the mod-25 gate for its
    # table's shape.
    gate_in = value % 25 in FIFTH_POWERS_MOD25
    required_in = row.table_id in _FORMS_GATE_IN
    if gate_in != required_in:
        requirement = "in" if required_in else "not in"
        evidence = {
            "n": value,
            "n_mod25": value % 25,
            "requirement": f"n mod 25 {requirement} {{1, 7, 18, 24}}",
        }
        return pairs, value, finding("congruence-gate-failure", evidence)

    # Finally the classifier itself must land on the table's shape and rank.
    cls = classify_radicand(pairs)
    if cls.form.value != row.table_id or cls.predicted_rank != row.rank:
        evidence = {
            "classifier_form": cls.form.value,
            "classifier_rank": cls.predicted_rank,
            "stated_rank": row.rank,
        }
        return pairs, value, finding("rank-mismatch", evidence)

    return pairs, value, None


def verify_fixtures() -> list[DiscrepancyReport]:
    """Check every embedded row; one report per inconsistent row."""
    reports = []
    for row in load_fixtures():
        _, _, report = _analyze_row(row)
        if report is not None:
            reports.append(report)
    return reports


def _small_primes(limit: int) -> list[int]:
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [p for p in range(2, limit + 1) if sieve[p]]


def _factored_block(lo: int, hi: int, base_primes: list[int]):
    """Factorizations of every integer in [lo, hi).

    Strikes each base prime through the block; whatever remains after all
    primes below sqrt(hi) is either 1 or a single prime larger than every
    base prime used, so factor lists come out sorted.
    """
    residual = list(range(lo, hi))
    factors: list[list[tuple[int, int]]] = [[] for _ in range(hi - lo)]
    for p in base_primes:
        if p * p >= hi:
            break
        for m in range(lo + (-lo) % p, hi, p):
            i = m - lo
            r = residual[i]
            e = 0
            while r % p == 0:
                r //= p
                e += 1
            residual[i] = r
            factors[i].append((p, e))
    for i, r in enumerate(residual):
        if r > 1:
            factors[i].append((r, 1))
    return factors


def _is_canonical(n: int, pairs) -> bool:
    """Whether n is the numerically smallest of its four associates."""
    if all(e == 1 for _, e in pairs):
        return True
    for t in (2, 3, 4):
        v = 1
        for p, e in pairs:
            v *= p ** (t * e % 5)
            if v > n:
                break
        if v < n:
            return False
    return True


def enumerate_classified(bound: int, form: FormClass | None = None, rank: int | None = None):
    """Yield classifications of all 5th-power-free n in [2, bound].

    Each field appears once, through its canonical radicand, in increasing
    canonical order. form/rank filters keep only matching records; a rank
    filter never yields NotCovered records.
    """
    if bound > 2**40:
        raise ValueError("bound above the supported ceiling of 2^40")
    base_primes = _small_primes(isqrt(bound))
    for lo in range(2, bound + 1, _BLOCK):
        hi = min(lo + _BLOCK, bound + 1)
        block = _factored_block(lo, hi, base_primes)
        for offset, pairs in enumerate(block):
            if any(e >= 5 for _, e in pairs):
                continue
            n = lo + offset
            if not _is_canonical(n, pairs):
                continue
            cls = _finish(n, _build_radicand(pairs))
            if form is not None and cls.form is not form:
                continue
            if rank is not None and cls.predicted_rank != rank:
                continue
            yield cls


def _clean_fixture_lookup(form: FormClass) -> dict[int, tuple[FixtureRow, int]]:
    """Map canonical radicand -> (fixture row, stated value) for the rows of
    one table that pass verification. Flagged rows are never matched."""
    lookup: dict[int, tuple[FixtureRow, int]] = {}
    for row in load_fixtures():
        if row.table_id != form.value:
            continue
        pairs, value, report = _analyze_row(row)
        if report is not None:
            continue
        canonical = normalize(pairs).n
        assert canonical not in lookup, f"duplicate clean fixture for {canonical}"
        lookup[canonical] = (row, value)
    return lookup


def _display_primes(cls: Classification) -> list[tuple[int, int, int]]:
    """(prime, mod 5, mod 25) per display slot of a matched classification.

    Two-prime tables order slots by descending exponent in the matched
    associate, then prefer residue 7 mod 25, then the smaller prime; the
    p/l slot of mixed-class tables always comes first. This reproduces the
    published column assignments.
    """
    t = cls.associate_t
    assert t is not None, "only covered forms have display slots"
    entries = []
    for (p, e), pcls in zip(cls.radicand.factors, cls.radicand.classes):
        if pcls is PrimeClass.Five:
            continue
        entries.append((p, t * e % 5, pcls))
    if cls.form in (FormClass.R1_4, FormClass.R2_2):
        entries.sort(key=lambda ent: ent[2] is PrimeClass.QType)
    else:
        entries.sort(key=lambda ent: (-ent[1], 0 if ent[0] % 25 == 7 else 1, ent[0]))
    return [(p, p % 5, p % 25) for p, _e, _c in entries]


def _balanced(residue: int, modulus: int) -> int:
    """Residue in (-modulus/2, modulus/2], as the published tables print."""
    return residue if residue <= modulus // 2 else residue - modulus


def emit_table(form: FormClass, bound: int, fmt: str) -> str:
    """Re-derive one published table for canonical radicands up to bound.

    Computed columns (primes, residues, rank) come from the classifier;
    the reported 5-class number and group type are filled from a verified
    fixture row when the canonical radicand matches one, and are marked
    "unverified" otherwise - they are never computed.
    """
    if form is FormClass.NotCovered:
        raise ValueError("NotCovered is not a table; pick one of the nine forms")
    if fmt not in ("csv", "md", "markdown", "json"):
        raise ValueError(f"unknown format {fmt!r}; use csv, md or json")
    symbols = _SLOT_SYMBOLS[form]
    lookup = _clean_fixture_lookup(form)
    rows = []
    for cls in enumerate_classified(bound, form=form):
        slots = _display_primes(cls)
        assert len(slots) == len(symbols)
        matched = lookup.get(cls.radicand.n)
        if matched is not None:
            fixture, value = matched
            display = fixture.n_cell
            h5: int | str = fixture.h5
            group = fixture.group
        else:
            value = cls.radicand.n
            factors = cls.radicand.factors
            if len(factors) == 1 and factors[0][1] == 1:
                display = str(value)
            else:
                display = f"{value}={_factor_string(factors)}"
            h5 = "unverified"
            group = "unverified"
        rows.append(
            {
                "slots": slots,
                "n": value,
                "n_display": display,
                "h5": h5,
                "group": group,
                "rank": cls.predicted_rank,
            }
        )
    if fmt == "json":
        return _table_json(symbols, rows)
    if fmt == "csv":
        return _table_csv(symbols, rows)
    return _table_md(symbols, rows)


def _slot_header(symbols, residue_suffixes=("_mod5", "_mod25")) -> list[str]:
    header = []
    for sym in symbols:
        header.extend((sym, sym + residue_suffixes[0], sym + residue_suffixes[1]))
    return header


def _table_json(symbols, rows) -> str:
    records = []
    for row in rows:
        rec = {}
        for sym, (p, m5, m25) in zip(symbols, row["slots"]):
            rec[sym] = p
            rec[sym + "_mod5"] = m5
            rec[sym + "_mod25"] = m25
        rec.update(
            n=row["n"],
            n_display=row["n_display"],
            h5=row["h5"],
            group=row["group"],
            rank=row["rank"],
            verified=row["h5"] != "unverified",
        )
        records.append(rec)
    return json.dumps(records, indent=2)


def _table_csv(symbols, rows) -> str:
    lines = [",".join(_slot_header(symbols) + ["n", "n_display", "h5", "group", "rank"])]
    for row in rows:
        cells = []
        for p, m5, m25 in row["slots"]:
            cells.extend((str(p), str(m5), str(m25)))
        # Group types like (5,5) are written with x so no field needs quoting.
        group = str(row["group"]).replace(",", "x")
        cells.extend((str(row["n"]), row["n_display"], str(row["h5"]), group, str(row["rank"])))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _table_md(symbols, rows) -> str:
    header = []
    for sym in symbols:
        header.extend((sym, f"{sym} (mod 5)", f"{sym} (mod 25)"))
    header.extend(("n", "h5", "group", "rank"))
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "|".join(" --- " for _ in header) + "|",
    ]
    for row in rows:
        cells = []
        for p, m5, m25 in row["slots"]:
            cells.extend((str(p), str(_balanced(m5, 5)), str(_balanced(m25, 25))))
        cells.extend((row["n_display"], str(row["h5"]), str(row["group"]), str(row["rank"])))
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"
