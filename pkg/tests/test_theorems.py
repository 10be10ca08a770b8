from __future__ import annotations

import random
from fractions import Fraction
from types import SimpleNamespace

import pytest
import sympy as sp

from lrc.algebra import Params, make_group
from lrc.collineation import SolutionSpace, collineation_space
from lrc.sampling import random_params
from lrc.scan import grid_points, load_grid
from lrc.theorems import (
    DETERMINANT_IDENTITIES,
    THEOREMS,
    Uncovered,
    det2,
    g2_kn_abcd,
    g2_kn_det_printed,
    g4_canonical_abcd,
    g4_canonical_det_printed,
    g4_kn_abcd,
    g4_kn_det_printed,
    g6_canonical_abcd,
    g6_canonical_det_printed,
    matching_cases,
    theorem_cases,
    theorem_predicate,
)

SYM = SimpleNamespace(**dict(zip(("alpha", "beta", "gamma", "delta"), sp.symbols("alpha beta gamma delta"))))


def _point(family, **kw):
    return make_group(family, kw).params


@pytest.mark.parametrize("family, flavor, params, expected", [
    ("G6", "kn", dict(alpha=0, beta=0, gamma=1, delta=1), SolutionSpace.full()),
    ("G4", "kn", dict(alpha=2, beta=1, eta=1), SolutionSpace.span([(0, 1, -1)])),
    ("G1", "canonical", dict(alpha=1, beta=0), SolutionSpace.trivial()),
])
def test_classifier_examples(family, flavor, params, expected):
    _, predicted = theorem_predicate(family, flavor, _point(family, **params))
    assert predicted == expected
    assert collineation_space(make_group(family, params), flavor) == expected


def test_cases_follow_printed_order():
    ids = [c.case_id for c in theorem_cases("G3", "canonical")]
    assert ids == [f"G3/canonical/({n})" for n in range(1, 7)] + ["G3/canonical/otherwise"]
    with pytest.raises(ValueError):
        theorem_cases("G3", "lc")
    assert {k[1] for k in THEOREMS} == {"canonical", "kn"}
    assert len(THEOREMS) == 14


def test_exact_substitution_in_spans():
    case, span = theorem_predicate("G6", "kn", _point("G6", alpha=3, beta=1, gamma=2, delta=6))
    assert case.case_id == "G6/kn/(2)"
    assert span == SolutionSpace.span([(0, Fraction(-2, 3), 1)])
    assert span.basis == ((0, 1, Fraction(-3, 2)),)


def test_zero_denominator_is_uncovered():
    # alpha=2beta makes D vanish in -C/D while det stays nonzero
    with pytest.raises(Uncovered) as info:
        theorem_predicate("G2", "canonical", _point("G2", alpha=2, beta=1, gamma=1))
    assert info.value.case_id == "G2/canonical/(2)"


def test_known_statement_gaps():
    # the computed space is nontrivial where no printed case applies
    for family, flavor, params, computed in [
        ("G3", "canonical", dict(alpha=1, beta=0, gamma=2), [(1, 0, 0)]),
        ("G4", "kn", dict(alpha=3, beta=1, eta=1), [(0, 1, -1)]),
        ("G4", "kn", dict(alpha=3, beta=-1, eta=-1), [(0, 1, 1)]),
    ]:
        case, predicted = theorem_predicate(family, flavor, _point(family, **params))
        assert case.case_id.endswith("/otherwise")
        assert predicted == SolutionSpace.trivial()
        assert collineation_space(make_group(family, params), flavor) == SolutionSpace.span(computed)


def test_printed_cases_are_disjoint_on_default_grid():
    overlaps = []
    for family, p in grid_points(load_grid()):
        for flavor in ("canonical", "kn"):
            hits = matching_cases(family, flavor, p)
            if len(hits) > 1:
                overlaps.append((family, flavor, p, [c.case_id for c in hits]))
    assert overlaps == []


def test_g4_kn_determinant_matches_printed_form():
    rng = random.Random("g4kn")
    for _ in range(50):
        p = random_params("G4", rng)
        for eta in (1, -1):
            assert det2(g4_kn_abcd(p, eta)) == g4_kn_det_printed(p, eta)


def test_g4_canonical_printed_form_is_sixteen_times_det():
    rng = random.Random("g4can")
    for _ in range(50):
        p = random_params("G4", rng)
        for eta in (1, -1):
            assert g4_canonical_det_printed(p, eta) == 16 * det2(g4_canonical_abcd(p, eta))


def test_g2_kn_determinant_carries_extra_gamma():
    s = SYM
    ratio = sp.cancel(det2(g2_kn_abcd(s)) / g2_kn_det_printed(s))
    assert ratio == -s.gamma


def test_g6_canonical_determinant_factorization():
    s = SYM
    det = sp.expand(det2(g6_canonical_abcd(s)))
    expected = -(s.alpha * s.delta - s.beta * s.gamma) * (
        2 * s.alpha * s.gamma - s.beta * s.delta + s.delta * s.gamma) ** 2 / 16
    assert sp.expand(det - expected) == 0
    assert sp.expand(det - g6_canonical_det_printed(s)) != 0


def test_determinant_table_is_complete():
    assert set(DETERMINANT_IDENTITIES) == {
        "G2/canonical", "G2/kn", "G4/canonical", "G4/kn", "G6/canonical"}
    p = Params(1, 2, 3)
    for name, (abcd, printed) in DETERMINANT_IDENTITIES.items():
        if name.startswith("G4"):
            continue
        assert isinstance(det2(abcd(p)), Fraction)
        assert isinstance(printed(p), Fraction)
