"""Lie derivatives of symmetric forms and the left-invariant Ricci-collineation space."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import ZERO, LieAlgebra3, Matrix3, Vec3, basis, bracket, is_zero
from .connections import Flavor
from .curvature import symmetric_ricci

# Upper-triangular components, 0-based.
ROW_ORDER = ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))


def bilinear(t: Matrix3, x: Vec3, y: Vec3) -> Fraction:
    return sum((x[i] * t[i][j] * y[j] for i in range(3) for j in range(3) if x[i] and y[j]), ZERO)


def lie_derivative_form(t: Matrix3, xi: Vec3, a: LieAlgebra3) -> Matrix3:
    """``(L_xi t)(e_i, e_j) = -t([xi, e_i], e_j) - t(e_i, [xi, e_j])``.

    The directional-derivative term drops out: frame components of a
    left-invariant tensor are constants.
    """
    ad = [bracket(xi, basis(i), a) for i in range(3)]
    # t(v, e_j) = sum_m v[m] t[m][j]
    return tuple(
        tuple(
            -sum((ad[i][m] * t[m][j] + ad[j][m] * t[i][m] for m in range(3)), ZERO)
            for j in range(3)
        )
        for i in range(3)
    )


@dataclass(frozen=True)
class CollineationSystem:
    """6x3 matrix; row ``(i, j)`` in ROW_ORDER, column k is the λ_k coefficient."""

    rows: tuple

    def apply(self, lam: Vec3) -> tuple:
        return tuple(sum((r[k] * lam[k] for k in range(3)), ZERO) for r in self.rows)

    def as_lists(self) -> list:
        return [[str(x) for x in r] for r in self.rows]


def assemble_system(t: Matrix3, a: LieAlgebra3) -> CollineationSystem:
    derivs = [lie_derivative_form(t, basis(k), a) for k in range(3)]
    return CollineationSystem(
        tuple(tuple(derivs[k][i][j] for k in range(3)) for i, j in ROW_ORDER)
    )


def rref(rows: Sequence[Sequence]) -> tuple[tuple, tuple]:
    """Reduced row echelon form over the rationals.

    Returns ``(nonzero_rows, pivot_columns)``; pivots are 1 and ascend.
    """
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return (), ()
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return tuple(tuple(row) for row in m[:r]), tuple(pivots)


@dataclass(frozen=True)
class SolutionSpace:
    """A subspace of the frame, stored as its canonical RREF basis."""

    dimension: int
    basis: tuple

    @classmethod
    def span(cls, vectors: Sequence[Sequence]) -> "SolutionSpace":
        vectors = [tuple(Fraction(x) for x in v) for v in vectors]
        rows, _ = rref(vectors) if vectors else ((), ())
        return cls(len(rows), rows)

    @classmethod
    def trivial(cls) -> "SolutionSpace":
        return cls(0, ())

    @classmethod
    def full(cls) -> "SolutionSpace":
        return cls.span([basis(0), basis(1), basis(2)])

    def contains(self, v: Vec3) -> bool:
        if is_zero(v):
            return True
        return SolutionSpace.span(list(self.basis) + [v]).dimension == self.dimension

    def as_lists(self) -> list:
        return [[str(x) for x in v] for v in self.basis]

    def as_dict(self) -> dict:
        return {"dimension": self.dimension, "basis": self.as_lists()}


def null_space(s: "CollineationSystem | Sequence[Sequence]") -> SolutionSpace:
    rows = s.rows if isinstance(s, CollineationSystem) else s
    ncols = 3 if isinstance(s, CollineationSystem) else len(rows[0])
    reduced, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    vectors = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(reduced, pivots):
            v[pc] = -row[f]
        vectors.append(tuple(v))
    return SolutionSpace.span(vectors) if vectors else SolutionSpace(0, ())


def collineation_space(a: LieAlgebra3, flavor: Flavor | str) -> SolutionSpace:
    return null_space(assemble_system(symmetric_ricci(a, flavor), a))


def solve_point(a: LieAlgebra3, flavor: Flavor | str) -> tuple[Matrix3, CollineationSystem, SolutionSpace]:
    t = symmetric_ricci(a, flavor)
    system = assemble_system(t, a)
    return t, system, null_space(system)
