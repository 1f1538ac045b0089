"""Tests for form matching and the classification record.

The heart of this file is a reference matcher written out longhand from
the nine covered-shape definitions, evaluated against an independent
factorization (sympy). Sweeping it against match_form checks both that
the library matches the right shape and that the shapes never overlap.
"""

from math import prod

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from quintic5.arith import factorize
from quintic5.classify import (
    Classification,
    classify,
    classify_radicand,
    conjecture_match,
    match_form,
    predicted_rank,
)
from quintic5.quintic import FormClass, normalize

_GATE = frozenset({1, 7, 18, 24})
_PM7 = frozenset({7, 18})


def _reference_match(pairs) -> set[FormClass]:
    """All covered shapes matched by any associate, written independently.

    pairs is the factorization of the radicand (exponents 1..4). Each of
    the nine conditions is restated literally; the caller asserts the
    result has at most one element.
    """
    forms = set()
    for t in (1, 2, 3, 4):
        scaled = {p: t * e % 5 for p, e in pairs}
        value = prod(p**e for p, e in scaled.items())
        gate = value % 25 in _GATE
        five_e = scaled.get(5, 0)
        ls = sorted((p, e) for p, e in scaled.items() if p != 5 and p % 5 == 1)
        ps = sorted((p, e) for p, e in scaled.items() if p % 5 == 4)
        qs = sorted((p, e) for p, e in scaled.items() if p % 5 in (2, 3))

        if five_e >= 1 and not gate:
            if not ls and not ps and len(qs) == 2:
                exps = sorted(e for _, e in qs)
                not_pm7 = [q for q, _ in qs if q % 25 not in _PM7]
                if exps == [1, 2] and not_pm7:
                    forms.add(FormClass.R1_1)
            if not ls and not qs and [e for _, e in ps] == [1]:
                if ps[0][0] % 25 != 24:
                    forms.add(FormClass.R1_2)
            if not ls and not ps and [e for _, e in qs] == [1]:
                if qs[0][0] % 25 in _PM7:
                    forms.add(FormClass.R1_3)
            if not ps and not qs and [e for _, e in ls] == [1]:
                if ls[0][0] % 25 != 1:
                    forms.add(FormClass.R2_1)
        if five_e == 0 and gate:
            if not ls and len(ps) == 1 and [e for _, e in qs] == [1]:
                if ps[0][0] % 25 != 24 and qs[0][0] % 25 not in _PM7:
                    forms.add(FormClass.R1_4)
            if not ls and not qs and len(ps) == 1:
                if ps[0][0] % 25 == 24:
                    forms.add(FormClass.R1_5)
            if not ls and not ps and len(qs) == 2:
                if min(e for _, e in qs) == 1 and all(q % 25 in _PM7 for q, _ in qs):
                    forms.add(FormClass.R1_6)
            if len(ls) == 1 and not ps and [e for _, e in qs] == [1]:
                if qs[0][0] % 25 in {2, 3, 7, 18, 22, 23}:
                    forms.add(FormClass.R2_2)
            if not ps and not qs and len(ls) == 1:
                if ls[0][0] % 25 == 1:
                    forms.add(FormClass.R2_3)
    return forms


_FORM_EXAMPLES = [
    (60, FormClass.R1_1),  # 5 * 2^2 * 3
    (90, FormClass.R1_1),  # 5 * 3^2 * 2
    (95, FormClass.R1_2),  # 5 * 19
    (475, FormClass.R1_2),  # 5^2 * 19
    (35, FormClass.R1_3),  # 5 * 7
    (175, FormClass.R1_3),  # 5^2 * 7
    (57, FormClass.R1_4),  # 3 * 19, 57 = 7 (mod 25)
    (118, FormClass.R1_4),  # 2 * 59
    (149, FormClass.R1_5),
    (22201, FormClass.R1_5),  # 149^2, canonical 149
    (2107, FormClass.R1_6),  # 7^2 * 43
    (55, FormClass.R2_1),  # 5 * 11
    (8507, FormClass.R2_2),  # 47 * 181
    (99, FormClass.R2_2),  # 3^2 * 11; associate 3 * 11^3 = 18 (mod 25)
    (101, FormClass.R2_3),
    (151, FormClass.R2_3),
    (2, FormClass.NotCovered),
    (11, FormClass.NotCovered),  # l-type but 11 fails the mod-25 gate
    (12, FormClass.NotCovered),
    (41, FormClass.NotCovered),
]


@pytest.mark.parametrize("n,form", _FORM_EXAMPLES)
def test_match_form_frozen_examples(n, form):
    got, t = match_form(normalize(factorize(n)))
    assert got is form
    assert (t is None) == (form is FormClass.NotCovered)


def test_match_form_sweep_against_reference_matcher():
    for n in range(2, 10001):
        fact = sympy.factorint(n)
        if any(e >= 5 for e in fact.values()):
            continue
        reference = _reference_match(sorted(fact.items()))
        assert len(reference) <= 1, (n, reference)
        form, _t = match_form(normalize(sorted(fact.items())))
        if reference:
            assert form is reference.pop(), n
        else:
            assert form is FormClass.NotCovered, n


def test_predicted_rank_per_form():
    rank1 = (FormClass.R1_1, FormClass.R1_2, FormClass.R1_3,
             FormClass.R1_4, FormClass.R1_5, FormClass.R1_6)
    rank2 = (FormClass.R2_1, FormClass.R2_2, FormClass.R2_3)
    for form in rank1:
        assert predicted_rank(form) == 1
    for form in rank2:
        assert predicted_rank(form) == 2
    assert predicted_rank(FormClass.NotCovered) is None


def test_conjecture_match_examples():
    for n in (60, 175, 2107):
        assert conjecture_match(normalize(factorize(n)))
    for n in (22201, 55, 151, 12):
        assert not conjecture_match(normalize(factorize(n)))


def test_classification_record_for_covered_radicand():
    cls = classify(55)
    assert cls.n == 55
    assert cls.radicand.n == 55
    assert cls.form is FormClass.R2_1
    assert cls.associate_t == 1
    assert cls.predicted_rank == 2
    assert not cls.conjecture_cyclic
    assert cls.profile.d == 5
    assert cls.indicators.q_star == 0
    assert not cls.indicators.zeta_is_norm
    assert cls.rank_bounds is None
    assert cls.as_json_dict() == {
        "n": 55,
        "canonical_n": 55,
        "form": "R2_1",
        "predicted_rank": 2,
        "d": 5,
        "q_star": 0,
        "zeta_norm": False,
        "lambda_ramified": True,
        "conjecture_cyclic": False,
        "associate_t": 1,
    }


def test_classification_record_for_uncovered_radicand():
    cls = classify(12)
    assert cls.form is FormClass.NotCovered
    assert cls.predicted_rank is None
    assert cls.associate_t is None
    assert cls.indicators.q_star is None
    assert cls.rank_bounds == (0, 1)
    record = cls.as_json_dict()
    assert record["rank_bounds"] == [0, 1]
    assert record["predicted_rank"] is None
    assert record["q_star"] is None
    assert record["associate_t"] is None

    # A lone inert prime: d = 2, zeta_5 not a norm, so the rank is pinned
    # to 0 even though no covered shape applies.
    assert classify(2).rank_bounds == (0, 0)


def test_json_record_keys_are_fixed():
    base_keys = [
        "n", "canonical_n", "form", "predicted_rank", "d", "q_star",
        "zeta_norm", "lambda_ramified", "conjecture_cyclic", "associate_t",
    ]
    assert list(classify(55).as_json_dict()) == base_keys
    assert list(classify(12).as_json_dict()) == base_keys + ["rank_bounds"]


def test_classify_normalizes_before_matching():
    via_square = classify(3249)  # 57^2
    direct = classify(57)
    assert via_square.n == 3249
    assert via_square.radicand == direct.radicand
    record_a = via_square.as_json_dict()
    record_b = direct.as_json_dict()
    assert record_a.pop("n") == 3249
    assert record_b.pop("n") == 57
    assert record_a == record_b


def test_classify_radicand_accepts_equivalent_inputs():
    expected = classify(55)
    assert classify_radicand(factorize(55)) == expected
    assert classify_radicand(normalize(factorize(55))) == expected
    assert classify_radicand([(5, 1), (11, 1)]) == expected


def test_classify_radicand_rejects_bad_pairs():
    with pytest.raises(ValueError):
        classify_radicand([(6, 1)])
    with pytest.raises(ValueError):
        classify_radicand([(2, 5)])  # perfect fifth power


@st.composite
def radicand_pairs(draw):
    primes = draw(
        st.lists(
            st.sampled_from([2, 3, 5, 7, 11, 13, 19, 43, 59, 101, 149, 151, 181]),
            min_size=1,
            max_size=3,
            unique=True,
        )
    )
    exps = draw(st.lists(st.integers(1, 4), min_size=len(primes), max_size=len(primes)))
    return list(zip(primes, exps))


@given(radicand_pairs(), st.sampled_from([2, 3, 4]))
@settings(max_examples=300, deadline=None)
def test_classification_is_associate_invariant(pairs, t):
    base = classify_radicand(pairs)
    scaled = classify_radicand([(p, t * e) for p, e in pairs])
    assert scaled.radicand == base.radicand
    assert scaled.form is base.form
    assert scaled.predicted_rank == base.predicted_rank
    assert scaled.conjecture_cyclic == base.conjecture_cyclic
    assert scaled.profile == base.profile
    assert scaled.indicators == base.indicators


def test_classification_instances_are_frozen():
    cls = classify(55)
    assert isinstance(cls, Classification)
    with pytest.raises(AttributeError):
        cls.predicted_rank = 1
