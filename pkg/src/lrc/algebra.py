"""Exact frame-level algebra for three-dimensional Lorentzian Lie algebras.

Scalars are :class:`fractions.Fraction`; vectors are 3-tuples of fractions in
the pseudo-orthonormal frame ``e1, e2, e3`` with ``e3`` timelike.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Rational = Fraction
Vec3 = tuple  # tuple[Fraction, Fraction, Fraction]
Matrix3 = tuple  # tuple[Vec3, Vec3, Vec3], row-major

ZERO = Fraction(0)
ONE = Fraction(1)

# g = diag(+1, +1, -1); J = diag(+1, +1, -1)
METRIC = (1, 1, -1)
PRODUCT_STRUCTURE = (1, 1, -1)

FAMILIES = ("G1", "G2", "G3", "G4", "G5", "G6", "G7")
CUSTOM = "Custom"
PARAM_NAMES = ("alpha", "beta", "gamma", "delta")

# Recorded verbatim in every report so a reader can see which G3 bracket
# convention the engine evaluates.
G3_CONVENTION_NOTE = (
    "G3 brackets evaluated as [e1,e2]=-gamma e3, [e1,e3]=-beta e2, [e2,e3]=alpha e1. "
    "The classification list prints [e1,e3]=e1-beta e2 (fails the Jacobi identity "
    "unless gamma=0) and the G3 section restates [e1,e2]=+gamma e3; only the "
    "-gamma sign reproduces the printed G3 Ricci and Lie-derivative tables."
)

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class ConstraintViolation(ValueError):
    """Parameters violate the printed constraints of a group family."""


class JacobiFailure(ValueError):
    """Structure constants do not satisfy the Jacobi identity."""


def parse_rational(text: str | int | Fraction) -> Fraction:
    """Parse ``"p/q"`` or an integer string into an exact fraction."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    m = _RATIONAL_RE.match(str(text))
    if m is None:
        raise ValueError(f"not a rational literal (expected 'p/q' or integer): {text!r}")
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def vec(*components) -> Vec3:
    if len(components) == 1:
        components = tuple(components[0])
    if len(components) != 3:
        raise ValueError("a frame vector has exactly three components")
    return tuple(Fraction(c) for c in components)


def basis(i: int) -> Vec3:
    return tuple(ONE if k == i else ZERO for k in range(3))


E1, E2, E3 = basis(0), basis(1), basis(2)


def add(x: Vec3, y: Vec3) -> Vec3:
    return (x[0] + y[0], x[1] + y[1], x[2] + y[2])


def sub(x: Vec3, y: Vec3) -> Vec3:
    return (x[0] - y[0], x[1] - y[1], x[2] - y[2])


def scale(s, x: Vec3) -> Vec3:
    return (s * x[0], s * x[1], s * x[2])


def lincomb(coeffs: Iterable, vectors: Iterable[Vec3]) -> Vec3:
    out = [ZERO, ZERO, ZERO]
    for s, v in zip(coeffs, vectors):
        if s:
            out[0] += s * v[0]
            out[1] += s * v[1]
            out[2] += s * v[2]
    return tuple(out)


def is_zero(x) -> bool:
    return all(c == 0 for c in x)


def metric(x: Vec3, y: Vec3) -> Fraction:
    """Lorentzian inner product g(x, y) in the pseudo-orthonormal frame."""
    return x[0] * y[0] + x[1] * y[1] - x[2] * y[2]


def apply_J(x: Vec3) -> Vec3:
    return (x[0], x[1], -x[2])


def zero_matrix() -> Matrix3:
    return ((ZERO,) * 3,) * 3


def matrix(rows: Sequence[Sequence]) -> Matrix3:
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise ValueError("expected a 3x3 matrix")
    return tuple(tuple(Fraction(x) for x in r) for r in rows)


def transpose(m: Matrix3) -> Matrix3:
    return tuple(tuple(m[j][i] for j in range(3)) for i in range(3))


@dataclass(frozen=True)
class Params:
    alpha: Fraction = ZERO
    beta: Fraction = ZERO
    gamma: Fraction = ZERO
    delta: Fraction = ZERO
    eta: int | None = None

    def __post_init__(self):
        for name in PARAM_NAMES:
            object.__setattr__(self, name, parse_rational(getattr(self, name)))
        if self.eta is not None:
            if self.eta not in (1, -1):
                raise ConstraintViolation("eta must be 1 or -1")
            object.__setattr__(self, "eta", int(self.eta))

    @classmethod
    def from_mapping(cls, data: Mapping) -> "Params":
        unknown = set(data) - set(PARAM_NAMES) - {"eta", "family"}
        if unknown:
            raise ValueError(f"unknown parameter keys: {sorted(unknown)}")
        kwargs = {k: parse_rational(data[k]) for k in PARAM_NAMES if data.get(k) is not None}
        if data.get("eta") is not None:
            kwargs["eta"] = int(parse_rational(data["eta"]))
        return cls(**kwargs)

    def as_dict(self) -> dict:
        out = {k: format_rational(getattr(self, k)) for k in PARAM_NAMES}
        if self.eta is not None:
            out["eta"] = self.eta
        return out

    def key(self) -> tuple:
        return (self.alpha, self.beta, self.gamma, self.delta, self.eta or 0)


@dataclass(frozen=True)
class LieAlgebra3:
    """Structure constants ``c[i][j][k]`` with ``[e_i, e_j] = sum_k c[i][j][k] e_k``."""

    constants: tuple
    family: str = CUSTOM
    params: Params = field(default_factory=Params)

    def bracket_basis(self, i: int, j: int) -> Vec3:
        return self.constants[i][j]

    def bracket(self, x: Vec3, y: Vec3) -> Vec3:
        return bracket(x, y, self)


def bracket(x: Vec3, y: Vec3, a: LieAlgebra3) -> Vec3:
    """Bilinear extension of the basis brackets."""
    out = [ZERO, ZERO, ZERO]
    c = a.constants
    for i in range(3):
        if not x[i]:
            continue
        for j in range(3):
            s = x[i] * y[j]
            if not s:
                continue
            cij = c[i][j]
            out[0] += s * cij[0]
            out[1] += s * cij[1]
            out[2] += s * cij[2]
    return tuple(out)


def jacobi_defect(a: LieAlgebra3) -> Vec3:
    """``[e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]]``; zero for a Lie algebra.

    In dimension three this single cyclic sum is the whole Jacobi identity.
    """
    e = (E1, E2, E3)
    total = (ZERO, ZERO, ZERO)
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        total = add(total, bracket(e[i], bracket(e[j], e[k], a), a))
    return total


def _constants_from_brackets(brackets: Mapping[tuple, Sequence]) -> tuple:
    c = [[[ZERO] * 3 for _ in range(3)] for _ in range(3)]
    for (i, j), v in brackets.items():
        v = vec(v)
        c[i][j] = list(v)
        c[j][i] = [-x for x in v]
    return tuple(tuple(tuple(c[i][j]) for j in range(3)) for i in range(3))


def custom_algebra(constants) -> LieAlgebra3:
    """Build an algebra from raw ``c[i][j][k]``; antisymmetry and Jacobi are enforced."""
    try:
        c = tuple(tuple(vec(constants[i][j]) for j in range(3)) for i in range(3))
    except (IndexError, TypeError) as exc:
        raise ValueError("structure constants must be a 3x3x3 array") from exc
    for i in range(3):
        for j in range(3):
            if add(c[i][j], c[j][i]) != (ZERO, ZERO, ZERO):
                raise ValueError(f"structure constants not antisymmetric at ({i + 1},{j + 1})")
    a = LieAlgebra3(c, CUSTOM, Params())
    if not is_zero(jacobi_defect(a)):
        raise JacobiFailure(f"Jacobi defect {jacobi_defect(a)} is nonzero")
    return a


def check_constraints(family: str, p: Params) -> None:
    al, be, ga, de = p.alpha, p.beta, p.gamma, p.delta
    if family == "G1" and al == 0:
        raise ConstraintViolation("G1 requires alpha≠0")
    if family == "G2" and ga == 0:
        raise ConstraintViolation("G2 requires gamma≠0")
    if family == "G4" and p.eta is None:
        raise ConstraintViolation("G4 requires eta=1 or eta=-1")
    if family in ("G5", "G6", "G7"):
        if al + de == 0:
            raise ConstraintViolation(f"{family} requires alpha+delta≠0")
        if family == "G5" and al * ga + be * de != 0:
            raise ConstraintViolation("G5 requires alpha*gamma+beta*delta=0")
        if family == "G6" and al * ga - be * de != 0:
            raise ConstraintViolation("G6 requires alpha*gamma-beta*delta=0")
        if family == "G7" and al * ga != 0:
            raise ConstraintViolation("G7 requires alpha*gamma=0")


def family_brackets(family: str, p: Params) -> dict:
    """Basis brackets ``{(i, j): [e_i, e_j]}`` (0-based, i < j) of a catalog family."""
    al, be, ga, de = p.alpha, p.beta, p.gamma, p.delta
    if family == "G1":
        return {(0, 1): (al, 0, -be), (0, 2): (-al, -be, 0), (1, 2): (be, al, al)}
    if family == "G2":
        return {(0, 1): (0, ga, -be), (0, 2): (0, -be, -ga), (1, 2): (al, 0, 0)}
    if family == "G3":
        return {(0, 1): (0, 0, -ga), (0, 2): (0, -be, 0), (1, 2): (al, 0, 0)}
    if family == "G4":
        eta = p.eta
        return {(0, 1): (0, -1, 2 * eta - be), (0, 2): (0, -be, 1), (1, 2): (al, 0, 0)}
    if family == "G5":
        return {(0, 1): (0, 0, 0), (0, 2): (al, be, 0), (1, 2): (ga, de, 0)}
    if family == "G6":
        return {(0, 1): (0, al, be), (0, 2): (0, ga, de), (1, 2): (0, 0, 0)}
    if family == "G7":
        return {(0, 1): (-al, -be, -be), (0, 2): (al, be, be), (1, 2): (ga, de, de)}
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def make_group(family: str, params: Params | Mapping | None = None) -> LieAlgebra3:
    if params is None:
        params = Params()
    elif not isinstance(params, Params):
        params = Params.from_mapping(params)
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if family != "G4" and params.eta is not None:
        params = Params(params.alpha, params.beta, params.gamma, params.delta)
    check_constraints(family, params)
    a = LieAlgebra3(_constants_from_brackets(family_brackets(family, params)), family, params)
    defect = jacobi_defect(a)
    if not is_zero(defect):
        raise JacobiFailure(f"{family} at {params.as_dict()} has Jacobi defect {defect}")
    return a
