"""Printed classification cases for G1-G7 under both connections.

Every case is encoded as printed, including statements whose proofs argue
otherwise; the computed null space is the ground truth they get compared
against.  Cases are tried in printed order and the first match wins.  The
classification statements are "if and only if", so a point outside every
printed case is predicted to have only the trivial collineation (an explicit
``otherwise`` case).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .algebra import Params, basis
from .collineation import SolutionSpace
from .connections import Flavor

H = Fraction(1, 2)
Q = Fraction(1, 4)

E1, E2, E3 = basis(0), basis(1), basis(2)


class Uncovered(Exception):
    """No printed case yields a prediction at this point."""

    def __init__(self, reason: str, case_id: str | None = None):
        super().__init__(reason)
        self.reason = reason
        self.case_id = case_id


@dataclass(frozen=True)
class TheoremCase:
    case_id: str
    text: str
    predicate: Callable[[Params], bool]
    # returns the spanning vectors, "full", "trivial"; raises ZeroDivisionError
    # when a printed coefficient has a vanishing denominator
    span: Callable[[Params], object]

    def predicted(self, p: Params) -> SolutionSpace:
        try:
            value = self.span(p)
        except ZeroDivisionError:
            raise Uncovered(f"{self.case_id}: printed coefficient has zero denominator", self.case_id)
        if value == "full":
            return SolutionSpace.full()
        if value == "trivial":
            return SolutionSpace.trivial()
        return SolutionSpace.span(value)


# -- determinant abbreviations --------------------------------------------------

def g2_canonical_abcd(p: Params):
    a, b, c = p.alpha, p.beta, p.gamma
    A = c * (2 * c * c + b * b + H * a * b)
    B = c * c * (Fraction(3, 2) * a - b) + a * b * (a - b)
    C = c * c * (b + Fraction(3, 2) * a) + a * a * b
    D = b * c * (H * a - b)
    return A, B, C, D


def g2_canonical_det_printed(p: Params) -> Fraction:
    a, b, c = p.alpha, p.beta, p.gamma
    return (4 * a**4 * b**2 - 4 * a**3 * b**3 + 12 * a**3 * b * c**2 - 7 * a**2 * b**2 * c**2
            + 9 * a**2 * b**4 - 4 * a * b**3 * c**2 + 4 * a * b * c**4 + 4 * b**4 * c**2
            + 4 * b**2 * c**4)


def g2_kn_abcd(p: Params):
    a, b, c = p.alpha, p.beta, p.gamma
    return 2 * c * c + a * b, c * (a - 2 * b), 2 * b * b + c * c, b * c


def g2_kn_det_printed(p: Params) -> Fraction:
    a, b, c = p.alpha, p.beta, p.gamma
    return (a - 4 * b) * (b * b + c * c)


def g4_canonical_abcd(p: Params, eta: int | None = None):
    a, b = p.alpha, p.beta
    eta = p.eta if eta is None else eta
    if eta == 1:
        A = (a / 2 + 1 + b) * (H * b - 1) + 1
        B = (a - b) * ((2 - b) * (a / 2 + 1) - 1) + H * (a / 2 + 1 - b)
        C = a * ((b - 2) * (a / 2 + 1) + 1) + H * (b - a / 2 - 1)
        D = H * b * (b - a / 2 - 1)
    else:
        A = (a / 2 - 1 + b) * (H * b + 1) + 1
        B = (a - b) * ((-2 - b) * (a / 2 - 1) - 1) + H * (a / 2 - 1 - b)
        C = a * ((b + 2) * (a / 2 - 1) + 1) + H * (b - a / 2 + 1)
        D = H * b * (b - a / 2 + 1)
    return A, B, C, D


def g4_canonical_det_printed(p: Params, eta: int | None = None) -> Fraction:
    a, b = p.alpha, p.beta
    eta = p.eta if eta is None else eta
    s = 1 if eta == 1 else -1
    # the eta=-1 expansion is the eta=1 one evaluated at (-alpha, -beta)
    return (4 * a**4 * b**2 - s * 16 * a**4 * b + 16 * a**4 - 4 * a**3 * b**3
            + s * 32 * a**3 * b**2 - 68 * a**3 * b + s * 40 * a**3 - s * 16 * a**2 * b**3
            + 73 * a**2 * b**2 - s * 98 * a**2 * b + 41 * a**2 - 20 * a * b**3
            + s * 60 * a * b**2 - 60 * a * b + s * 20 * a + 4 * b**4 - s * 16 * b**3
            + 24 * b**2 - s * 16 * b + 4)


def g4_kn_abcd(p: Params, eta: int | None = None):
    a, b = p.alpha, p.beta
    eta = p.eta if eta is None else eta
    return 1 + H * a * (b - 2 * eta), b - a / 2, H + b * (b - 2 * eta), -H * b


def g4_kn_det_printed(p: Params, eta: int | None = None) -> Fraction:
    a, b = p.alpha, p.beta
    eta = p.eta if eta is None else eta
    return (Q * a - b) * (b - eta) ** 2


def g6_canonical_abcd(p: Params):
    a, b, c, d = p.alpha, p.beta, p.gamma, p.delta
    w = -a * c + H * d * (b - c)
    A = -a**3 - H * a * b * c + H * b * (b - c) * (a + H * d)
    B = -a * a * c - H * a * c * d + H * (b - c) * (b * c + H * d * d)
    return A, B, H * a * w, H * c * w


def g6_canonical_det_printed(p: Params) -> Fraction:
    a, b, c, d = p.alpha, p.beta, p.gamma, p.delta
    return Q * c * (a + d) * (a * d - b * c)


def det2(abcd) -> Fraction:
    A, B, C, D = abcd
    return A * D - B * C


# -- theorem statements -------------------------------------------------------------

def _case(family, flavor, label, text, predicate, span):
    return TheoremCase(f"{family}/{flavor}/{label}", text, predicate, span)


def _otherwise(family, flavor):
    return _case(family, flavor, "otherwise", "no printed case applies: no collineations",
                 lambda p: True, lambda p: "trivial")


def _g2_can_span(p):
    _, _, C, D = g2_canonical_abcd(p)
    return [(0, 1, -C / D)]


def _g4_can_span(p):
    _, _, C, D = g4_canonical_abcd(p)
    return [(0, 1, -C / D)]


def _build() -> dict:
    T = {}
    T[("G1", "canonical")] = [_case("G1", "canonical", "none", "never admits collineations",
                                    lambda p: True, lambda p: "trivial")]
    T[("G1", "kn")] = [_case("G1", "kn", "none", "never admits collineations",
                             lambda p: True, lambda p: "trivial")]

    T[("G2", "canonical")] = [
        _case("G2", "canonical", "(1)", "alpha=beta=0 => <e3>",
              lambda p: p.alpha == 0 and p.beta == 0, lambda p: [E3]),
        _case("G2", "canonical", "(2)", "alpha≠0, beta≠0, det|A B; C D|≠0 => <e2 - (C/D) e3>",
              lambda p: p.alpha != 0 and p.beta != 0 and det2(g2_canonical_abcd(p)) != 0,
              _g2_can_span),
        _otherwise("G2", "canonical"),
    ]
    T[("G2", "kn")] = [
        _case("G2", "kn", "(1)", "alpha=beta=0 => <e3>",
              lambda p: p.alpha == 0 and p.beta == 0, lambda p: [E3]),
        _case("G2", "kn", "(2)", "alpha=0, beta≠0 => <e2 + (gamma/beta) e3>",
              lambda p: p.alpha == 0 and p.beta != 0, lambda p: [(0, 1, p.gamma / p.beta)]),
        _case("G2", "kn", "(3)",
              "alpha≠0, beta≠0, alpha=4beta => <e2 - (2beta^2+gamma^2)/(beta gamma) e3>",
              lambda p: p.alpha != 0 and p.beta != 0 and p.alpha == 4 * p.beta,
              lambda p: [(0, 1, -(2 * p.beta**2 + p.gamma**2) / (p.beta * p.gamma))]),
        _otherwise("G2", "kn"),
    ]

    T[("G3", "canonical")] = [
        _case("G3", "canonical", "(1)", "gamma=0 => full",
              lambda p: p.gamma == 0, lambda p: "full"),
        _case("G3", "canonical", "(2)", "gamma≠0, alpha=beta=0 => full",
              lambda p: p.gamma != 0 and p.alpha == 0 and p.beta == 0, lambda p: "full"),
        _case("G3", "canonical", "(3)", "alpha=0, gamma≠0, beta≠0, beta=gamma => full",
              lambda p: p.alpha == 0 and p.gamma != 0 and p.beta != 0 and p.beta == p.gamma,
              lambda p: "full"),
        _case("G3", "canonical", "(4)", "alpha=0, gamma≠0, beta≠0, beta≠gamma => <e2>",
              lambda p: p.alpha == 0 and p.gamma != 0 and p.beta != 0 and p.beta != p.gamma,
              lambda p: [E2]),
        _case("G3", "canonical", "(5)", "gamma≠0, alpha≠0, gamma=alpha+beta => full",
              lambda p: p.gamma != 0 and p.alpha != 0 and p.gamma == p.alpha + p.beta,
              lambda p: "full"),
        _case("G3", "canonical", "(6)",
              "gamma≠0, alpha≠0, gamma≠alpha+beta, alpha=beta => <e3>",
              lambda p: (p.gamma != 0 and p.alpha != 0 and p.gamma != p.alpha + p.beta
                         and p.alpha == p.beta),
              lambda p: [E3]),
        _otherwise("G3", "canonical"),
    ]
    T[("G3", "kn")] = [
        _case("G3", "kn", "(1)", "alpha*beta*gamma=0 => full",
              lambda p: p.alpha * p.beta * p.gamma == 0, lambda p: "full"),
        _case("G3", "kn", "(2)", "alpha*beta*gamma≠0 => <e3>",
              lambda p: p.alpha * p.beta * p.gamma != 0, lambda p: [E3]),
    ]

    T[("G4", "canonical")] = [
        _case("G4", "canonical", "(1)", "beta=0, eta=1, alpha=0 => <e1>",
              lambda p: p.beta == 0 and p.eta == 1 and p.alpha == 0, lambda p: [E1]),
        _case("G4", "canonical", "(2)", "beta=0, eta=1, (alpha+2)(alpha+1/4)=0 => <e3>",
              lambda p: p.beta == 0 and p.eta == 1 and (p.alpha + 2) * (p.alpha + Q) == 0,
              lambda p: [E3]),
        _case("G4", "canonical", "(3)", "beta=0, eta=-1, alpha=0 => <e1>",
              lambda p: p.beta == 0 and p.eta == -1 and p.alpha == 0, lambda p: [E1]),
        _case("G4", "canonical", "(4)", "beta=0, eta=-1, (alpha-2)(alpha-1/4)=0 => <e3>",
              lambda p: p.beta == 0 and p.eta == -1 and (p.alpha - 2) * (p.alpha - Q) == 0,
              lambda p: [E3]),
        _case("G4", "canonical", "(5)", "beta≠0, eta=1, alpha=0, beta=1 => full",
              lambda p: p.eta == 1 and p.alpha == 0 and p.beta == 1, lambda p: "full"),
        _case("G4", "canonical", "(6)", "beta≠0, eta=1, alpha=2, beta=2 => <e3>",
              lambda p: p.eta == 1 and p.alpha == 2 and p.beta == 2, lambda p: [E3]),
        _case("G4", "canonical", "(7)",
              "beta≠0, eta=1, alpha+2≠2beta, det|A B; C D|=0 => <e2 - (C/D) e3>",
              lambda p: (p.beta != 0 and p.eta == 1 and p.alpha + 2 != 2 * p.beta
                         and det2(g4_canonical_abcd(p)) == 0),
              _g4_can_span),
        _case("G4", "canonical", "(8)", "beta≠0, eta=-1, alpha=0, beta=-1 => full",
              lambda p: p.eta == -1 and p.alpha == 0 and p.beta == -1, lambda p: "full"),
        _case("G4", "canonical", "(9)", "beta≠0, eta=-1, alpha=-2, beta=-2 => <e3>",
              lambda p: p.eta == -1 and p.alpha == -2 and p.beta == -2, lambda p: [E3]),
        _case("G4", "canonical", "(10)",
              "beta≠0, eta=-1, alpha-2≠2beta, det|A B; C D|=0 => <e2 - (C/D) e3>",
              lambda p: (p.beta != 0 and p.eta == -1 and p.alpha - 2 != 2 * p.beta
                         and det2(g4_canonical_abcd(p)) == 0),
              _g4_can_span),
        _otherwise("G4", "canonical"),
    ]
    T[("G4", "kn")] = [
        _case("G4", "kn", "(1)", "alpha=beta=0 => <e3>",
              lambda p: p.alpha == 0 and p.beta == 0, lambda p: [E3]),
        _case("G4", "kn", "(2)", "alpha=0, beta≠0 => <e2 - (1/beta) e3>",
              lambda p: p.alpha == 0 and p.beta != 0, lambda p: [(0, 1, -1 / p.beta)]),
        _case("G4", "kn", "(3)", "alpha≠0, beta=0, alpha*eta=1 => <e1>",
              lambda p: p.alpha != 0 and p.beta == 0 and p.alpha * p.eta == 1, lambda p: [E1]),
        _case("G4", "kn", "(4)",
              "alpha≠0, beta≠0, eta=1, alpha=4beta => <e2 + (alpha^2-8alpha+8)/(2alpha) e3>",
              lambda p: p.alpha != 0 and p.beta != 0 and p.eta == 1 and p.alpha == 4 * p.beta,
              lambda p: [(0, 1, (p.alpha**2 - 8 * p.alpha + 8) / (2 * p.alpha))]),
        _case("G4", "kn", "(5)", "alpha≠0, beta≠0, eta=1, alpha=2, beta=1 => <e2 - e3>",
              lambda p: p.eta == 1 and p.alpha == 2 and p.beta == 1, lambda p: [(0, 1, -1)]),
        _case("G4", "kn", "(6)",
              "alpha≠0, beta≠0, eta=-1, alpha=4beta => <e2 + (alpha^2+8alpha+8)/(2alpha) e3>",
              lambda p: p.alpha != 0 and p.beta != 0 and p.eta == -1 and p.alpha == 4 * p.beta,
              lambda p: [(0, 1, (p.alpha**2 + 8 * p.alpha + 8) / (2 * p.alpha))]),
        _case("G4", "kn", "(7)", "alpha≠0, beta≠0, eta=-1, alpha=-2, beta=-1 => <e2 + e3>",
              lambda p: p.eta == -1 and p.alpha == -2 and p.beta == -1, lambda p: [(0, 1, 1)]),
        _otherwise("G4", "kn"),
    ]

    for flavor in ("canonical", "kn"):
        T[("G5", flavor)] = [_case("G5", flavor, "all", "always admits: full",
                                   lambda p: True, lambda p: "full")]

    T[("G6", "canonical")] = [
        _case("G6", "canonical", "(1)", "gamma=0, alpha(2alpha^2-beta^2)=0 => full",
              lambda p: p.gamma == 0 and p.alpha * (2 * p.alpha**2 - p.beta**2) == 0,
              lambda p: "full"),
        _case("G6", "canonical", "(2)", "gamma=0, alpha(2alpha^2-beta^2)≠0 => <e3>",
              lambda p: p.gamma == 0 and p.alpha * (2 * p.alpha**2 - p.beta**2) != 0,
              lambda p: [E3]),
        _case("G6", "canonical", "(3)", "gamma≠0, alpha=beta=0, delta≠0 => <e2>",
              lambda p: p.gamma != 0 and p.alpha == 0 and p.beta == 0 and p.delta != 0,
              lambda p: [E2]),
        _case("G6", "canonical", "(4)",
              "gamma≠0, alpha≠0, alpha+beta=0, gamma+delta=0, delta≠0 => <e2 + (alpha/delta) e3>",
              lambda p: (p.gamma != 0 and p.alpha != 0 and p.alpha + p.beta == 0
                         and p.gamma + p.delta == 0 and p.delta != 0),
              lambda p: [(0, 1, p.alpha / p.delta)]),
        _case("G6", "canonical", "(5)",
              "gamma≠0, alpha≠0, alpha=beta, gamma=delta, delta≠0 => <e2 - (alpha/delta) e3>",
              lambda p: (p.gamma != 0 and p.alpha != 0 and p.alpha == p.beta
                         and p.gamma == p.delta and p.delta != 0),
              lambda p: [(0, 1, -p.alpha / p.delta)]),
        _otherwise("G6", "canonical"),
    ]
    T[("G6", "kn")] = [
        _case("G6", "kn", "(1)", "alpha=beta=0, delta≠0 => full",
              lambda p: p.alpha == 0 and p.beta == 0 and p.delta != 0, lambda p: "full"),
        _case("G6", "kn", "(2)", "alpha≠0 => <-(gamma/alpha) e2 + e3>",
              lambda p: p.alpha != 0, lambda p: [(0, -p.gamma / p.alpha, 1)]),
        _otherwise("G6", "kn"),
    ]

    T[("G7", "canonical")] = [
        _case("G7", "canonical", "(1)", "alpha=0, delta≠0, gamma≠0, beta=0 => <e1>",
              lambda p: p.alpha == 0 and p.delta != 0 and p.gamma != 0 and p.beta == 0,
              lambda p: [E1]),
        _case("G7", "canonical", "(2)", "alpha=0, delta≠0, gamma=0 => full",
              lambda p: p.alpha == 0 and p.delta != 0 and p.gamma == 0, lambda p: "full"),
        _case("G7", "canonical", "(3)", "alpha≠0, gamma=delta=0 => <e2 + e3>",
              lambda p: p.alpha != 0 and p.gamma == 0 and p.delta == 0, lambda p: [(0, 1, 1)]),
        _otherwise("G7", "canonical"),
    ]
    T[("G7", "kn")] = [
        _case("G7", "kn", "(1)",
              "alpha=0, delta≠0, beta≠0, gamma=0 => <e1 - (beta/delta) e2 - (beta/delta) e3>",
              lambda p: p.alpha == 0 and p.delta != 0 and p.beta != 0 and p.gamma == 0,
              lambda p: [(1, -p.beta / p.delta, -p.beta / p.delta)]),
        _case("G7", "kn", "(2)", "alpha=0, delta≠0, beta=0 => <e1>",
              lambda p: p.alpha == 0 and p.delta != 0 and p.beta == 0, lambda p: [E1]),
        _case("G7", "kn", "(3)", "alpha≠0, gamma=0, delta=0 => <e2 + e3>",
              lambda p: p.alpha != 0 and p.gamma == 0 and p.delta == 0, lambda p: [(0, 1, 1)]),
        _otherwise("G7", "kn"),
    ]
    return T


THEOREMS = _build()


def theorem_cases(family: str, flavor: Flavor | str) -> list:
    flavor = Flavor.parse(flavor)
    if flavor is Flavor.LEVI_CIVITA:
        raise ValueError("classification covers the canonical and Kobayashi-Nomizu connections only")
    return THEOREMS[(family, flavor.value)]


def matching_cases(family: str, flavor: Flavor | str, p: Params) -> list:
    """All printed (non-fallback) cases whose predicate holds at p."""
    return [c for c in theorem_cases(family, flavor)
            if not c.case_id.endswith("/otherwise") and c.predicate(p)]


def theorem_predicate(family: str, flavor: Flavor | str, p: Params) -> tuple[TheoremCase, SolutionSpace]:
    """First printed case that applies, with its predicted span; raises Uncovered."""
    for case in theorem_cases(family, flavor):
        if case.predicate(p):
            return case, case.predicted(p)
    raise Uncovered(f"no printed case of {family}/{Flavor.parse(flavor).value} applies")


DETERMINANT_IDENTITIES = {
    # name: (A..D function, printed closed form)
    "G2/canonical": (g2_canonical_abcd, g2_canonical_det_printed),
    "G2/kn": (g2_kn_abcd, g2_kn_det_printed),
    "G4/canonical": (g4_canonical_abcd, g4_canonical_det_printed),
    "G4/kn": (g4_kn_abcd, g4_kn_det_printed),
    "G6/canonical": (g6_canonical_abcd, g6_canonical_det_printed),
}
