"""Compare the engine against the printed Ricci matrices and Lie-derivative tables.

A disagreement is not an error: the computed value is taken as ground truth and
the disagreement is kept as a :class:`LemmaDiscrepancy` that carries enough
data (structure constants, both values) to be checked by hand.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .algebra import FAMILIES, basis, format_rational, make_group
from .collineation import lie_derivative_form
from .curvature import operator_to_form, symmetric_ricci
from .sampling import random_params
from .tables import LIE_DERIVATIVE_TABLES, RICCI_OPERATORS, printed_lie_table, printed_ricci_operator

FLAVORS = ("canonical", "kn")


@dataclass(frozen=True)
class LemmaDiscrepancy:
    kind: str  # "ricci" or "lie"
    family: str
    flavor: str
    entry: str
    params: dict
    constants: list
    computed: str
    printed: str

    def has_certificate(self) -> bool:
        return bool(self.params) and len(self.constants) == 3 and self.computed != self.printed

    def as_dict(self) -> dict:
        return {
            "kind": self.kind, "family": self.family, "flavor": self.flavor,
            "entry": self.entry, "params": self.params, "constants": self.constants,
            "computed": self.computed, "printed": self.printed,
        }


@dataclass
class LemmaCheck:
    kind: str
    family: str
    flavor: str
    points: int = 0
    comparisons: int = 0
    discrepancies: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def entries(self) -> list:
        return sorted({d.entry for d in self.discrepancies})

    def as_dict(self) -> dict:
        return {
            "kind": self.kind, "family": self.family, "flavor": self.flavor,
            "points": self.points, "comparisons": self.comparisons,
            "discrepant_entries": self.entries(),
            "discrepancies": [d.as_dict() for d in self.discrepancies],
        }


def _constants(a) -> list:
    return [[[format_rational(x) for x in a.constants[i][j]] for j in range(3)] for i in range(3)]


def _record(kind, family, flavor, entry, p, a, computed, printed):
    return LemmaDiscrepancy(kind, family, flavor, entry, p.as_dict(), _constants(a),
                            format_rational(computed), format_rational(printed))


def check_ricci(family: str, flavor: str, points: int = 20, seed: int = 0) -> LemmaCheck:
    rng = random.Random(f"ricci/{family}/{flavor}/{seed}")
    check = LemmaCheck("ricci", family, flavor)
    for _ in range(points):
        p = random_params(family, rng)
        a = make_group(family, p)
        t = symmetric_ricci(a, flavor)
        printed = operator_to_form(printed_ricci_operator(family, flavor, a.params))
        check.points += 1
        for i in range(3):
            for j in range(3):
                check.comparisons += 1
                if t[i][j] != printed[i][j]:
                    check.discrepancies.append(
                        _record("ricci", family, flavor, f"Ric({i + 1},{j + 1})", a.params, a,
                                t[i][j], printed[i][j]))
    return check


def check_lie_table(family: str, flavor: str, points: int = 20, seed: int = 0) -> LemmaCheck:
    """Only the printed components are compared; unprinted ones are not guessed."""
    rng = random.Random(f"lie/{family}/{flavor}/{seed}")
    check = LemmaCheck("lie", family, flavor)
    for _ in range(points):
        p = random_params(family, rng)
        a = make_group(family, p)
        t = symmetric_ricci(a, flavor)
        derivs = [lie_derivative_form(t, basis(k), a) for k in range(3)]
        check.points += 1
        for (k, i, j), value in sorted(printed_lie_table(family, flavor, a.params).items()):
            check.comparisons += 1
            computed = derivs[k - 1][i - 1][j - 1]
            if computed != value:
                check.discrepancies.append(
                    _record("lie", family, flavor, f"L_e{k}({i},{j})", a.params, a, computed, value))
    return check


def check_lemmas(families=FAMILIES, flavors=FLAVORS, points: int = 20, seed: int = 0,
                 kinds=("ricci", "lie")) -> list:
    out = []
    for family in families:
        for flavor in flavors:
            if "ricci" in kinds and (family, flavor) in RICCI_OPERATORS:
                out.append(check_ricci(family, flavor, points, seed))
            if "lie" in kinds and (family, flavor) in LIE_DERIVATIVE_TABLES:
                out.append(check_lie_table(family, flavor, points, seed))
    return out
