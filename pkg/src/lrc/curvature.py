"""Curvature, Ricci traces and the symmetrized Ricci forms of a frame connection."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    METRIC,
    LieAlgebra3,
    Matrix3,
    lincomb,
    matrix,
    sub,
    transpose,
)
from .connections import Connection, Flavor, connection

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class CurvatureTensor:
    """``r[i][j][k]`` is the frame vector ``R(e_i, e_j) e_k``."""

    r: tuple


def curvature(c: Connection, a: LieAlgebra3) -> CurvatureTensor:
    # R(X,Y)Z = ∇_X ∇_Y Z - ∇_Y ∇_X Z - ∇_{[X,Y]} Z
    g = c.gamma
    out = []
    for i in range(3):
        row = []
        for j in range(3):
            br = a.constants[i][j]
            cell = []
            for k in range(3):
                first = c.on_basis(i, g[j][k])
                second = c.on_basis(j, g[i][k])
                third = lincomb(br, (g[0][k], g[1][k], g[2][k]))
                cell.append(sub(sub(first, second), third))
            row.append(tuple(cell))
        out.append(tuple(row))
    return CurvatureTensor(tuple(out))


def ricci_form(r: CurvatureTensor) -> Matrix3:
    """``Ric(e_i, e_j) = -g(R(e_i,e1)e_j,e1) - g(R(e_i,e2)e_j,e2) + g(R(e_i,e3)e_j,e3)``."""
    sign = (-1, -1, 1)
    rows = []
    for i in range(3):
        row = []
        for j in range(3):
            total = Fraction(0)
            for k in range(3):
                v = r.r[i][k][j]
                # g(v, e_k) = METRIC[k] * v[k]
                total += sign[k] * METRIC[k] * v[k]
            row.append(total)
        rows.append(tuple(row))
    return tuple(rows)


def symmetrize(t: Matrix3) -> Matrix3:
    tt = transpose(t)
    return tuple(tuple((t[i][j] + tt[i][j]) * HALF for j in range(3)) for i in range(3))


def is_symmetric(t: Matrix3) -> bool:
    return all(t[i][j] == t[j][i] for i in range(3) for j in range(i + 1, 3))


def operator_to_form(m) -> Matrix3:
    """Row-convention operator (row i = image of e_i) to the form ``g(A e_i, e_j)``."""
    m = matrix(m)
    return tuple(tuple(m[i][j] * METRIC[j] for j in range(3)) for i in range(3))


def form_to_operator(t) -> Matrix3:
    t = matrix(t)
    return tuple(tuple(t[i][j] * METRIC[j] for j in range(3)) for i in range(3))


def ricci_raw(a: LieAlgebra3, flavor) -> Matrix3:
    return ricci_form(curvature(connection(a, flavor), a))


def symmetric_ricci(a: LieAlgebra3, flavor: Flavor | str) -> Matrix3:
    return symmetrize(ricci_raw(a, Flavor.parse(flavor)))


def curvature_antisymmetry_defect(r: CurvatureTensor) -> tuple:
    return tuple(
        tuple(
            tuple(tuple(x + y for x, y in zip(r.r[i][j][k], r.r[j][i][k])) for k in range(3))
            for j in range(3)
        )
        for i in range(3)
    )
