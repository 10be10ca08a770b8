"""Levi-Civita, canonical and Kobayashi-Nomizu connections from structure constants."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    METRIC,
    PRODUCT_STRUCTURE,
    ZERO,
    LieAlgebra3,
    Vec3,
    apply_J,
    basis,
    bracket,
    lincomb,
    metric,
    sub,
)

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


class Flavor(str, enum.Enum):
    LEVI_CIVITA = "levi-civita"
    CANONICAL = "canonical"
    KOBAYASHI_NOMIZU = "kn"

    @classmethod
    def parse(cls, text: "str | Flavor") -> "Flavor":
        if isinstance(text, Flavor):
            return text
        key = str(text).strip().lower().replace("_", "-")
        aliases = {
            "lc": cls.LEVI_CIVITA,
            "levi-civita": cls.LEVI_CIVITA,
            "canonical": cls.CANONICAL,
            "can": cls.CANONICAL,
            "0": cls.CANONICAL,
            "kn": cls.KOBAYASHI_NOMIZU,
            "kobayashi-nomizu": cls.KOBAYASHI_NOMIZU,
            "1": cls.KOBAYASHI_NOMIZU,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown connection {text!r}; use 'canonical' or 'kn'") from None


@dataclass(frozen=True)
class Connection:
    """``gamma[i][j]`` is the frame vector ``∇_{e_i} e_j``."""

    gamma: tuple
    flavor: Flavor

    def covariant(self, x: Vec3, y: Vec3) -> Vec3:
        """``∇_x y`` for constant-coefficient (left-invariant) fields x, y."""
        out = [ZERO, ZERO, ZERO]
        for i in range(3):
            if not x[i]:
                continue
            for j in range(3):
                s = x[i] * y[j]
                if s:
                    g = self.gamma[i][j]
                    out[0] += s * g[0]
                    out[1] += s * g[1]
                    out[2] += s * g[2]
        return tuple(out)

    def on_basis(self, i: int, y: Vec3) -> Vec3:
        return lincomb(y, self.gamma[i])


@dataclass(frozen=True)
class NablaJ:
    """``nj[i][j]`` is the frame vector ``(∇_{e_i} J) e_j``."""

    nj: tuple

    def apply(self, i: int, y: Vec3) -> Vec3:
        return lincomb(y, self.nj[i])


def _table(fn) -> tuple:
    return tuple(tuple(tuple(fn(i, j)) for j in range(3)) for i in range(3))


def levi_civita(a: LieAlgebra3) -> Connection:
    # Koszul formula; the X g(Y, Z) terms vanish for left-invariant fields.
    # On the frame g([e_i,e_j], e_k) = eps_k c[i][j][k].
    c, eps = a.constants, METRIC

    def entry(i, j):
        comps = []
        for k in range(3):
            two_g = eps[k] * c[i][j][k] - eps[i] * c[j][k][i] + eps[j] * c[k][i][j]
            comps.append(eps[k] * two_g * HALF)
        return comps

    return Connection(_table(entry), Flavor.LEVI_CIVITA)


def nabla_J(lc: Connection, J=PRODUCT_STRUCTURE) -> NablaJ:
    if lc.flavor is not Flavor.LEVI_CIVITA:
        raise ValueError("nabla_J expects the Levi-Civita connection")

    def entry(i, j):
        g = lc.gamma[i][j]
        # ∇_{e_i}(J e_j) - J(∇_{e_i} e_j) with J diagonal
        return [J[j] * g[k] - J[k] * g[k] for k in range(3)]

    return NablaJ(_table(entry))


def canonical_connection(lc: Connection, nj: NablaJ) -> Connection:
    if lc.flavor is not Flavor.LEVI_CIVITA:
        raise ValueError("canonical_connection expects the Levi-Civita connection")
    J = PRODUCT_STRUCTURE

    def entry(i, j):
        # ∇⁰_{e_i} e_j = ∇_{e_i} e_j - ½ (∇_{e_i} J)(J e_j)
        corr = nj.nj[i][j]
        return [lc.gamma[i][j][k] - HALF * J[j] * corr[k] for k in range(3)]

    return Connection(_table(entry), Flavor.CANONICAL)


def kobayashi_nomizu(lc: Connection, can: Connection, nj: NablaJ) -> Connection:
    if lc.flavor is not Flavor.LEVI_CIVITA or can.flavor is not Flavor.CANONICAL:
        raise ValueError("kobayashi_nomizu expects (Levi-Civita, canonical, ∇J)")
    J = PRODUCT_STRUCTURE

    def entry(i, j):
        # ∇¹_X Y = ∇⁰_X Y - ¼[(∇_Y J) J X - (∇_{JY} J) X], X = e_i, Y = e_j;
        # J e_j = ±e_j so ∇_{J e_j} J = ±∇_{e_j} J.
        v = nj.nj[j][i]
        w = J[i] - J[j]
        return [can.gamma[i][j][k] - QUARTER * w * v[k] for k in range(3)]

    return Connection(_table(entry), Flavor.KOBAYASHI_NOMIZU)


def connection(a: LieAlgebra3, flavor: "Flavor | str") -> Connection:
    flavor = Flavor.parse(flavor)
    lc = levi_civita(a)
    if flavor is Flavor.LEVI_CIVITA:
        return lc
    nj = nabla_J(lc)
    can = canonical_connection(lc, nj)
    if flavor is Flavor.CANONICAL:
        return can
    return kobayashi_nomizu(lc, can, nj)


# -- property defects (all-zero tables when the property holds) ---------------

def torsion(c: Connection, a: LieAlgebra3) -> tuple:
    e = [basis(i) for i in range(3)]
    return _table(lambda i, j: sub(sub(c.gamma[i][j], c.gamma[j][i]), bracket(e[i], e[j], a)))


def metric_defect(c: Connection) -> tuple:
    """``g(∇_i e_j, e_k) + g(e_j, ∇_i e_k)`` for all i, j, k."""
    e = [basis(i) for i in range(3)]
    return tuple(
        tuple(
            tuple(metric(c.gamma[i][j], e[k]) + metric(e[j], c.gamma[i][k]) for k in range(3))
            for j in range(3)
        )
        for i in range(3)
    )


def j_parallel_defect(c: Connection) -> tuple:
    """``∇_i (J e_j) - J(∇_i e_j)``."""
    J = PRODUCT_STRUCTURE
    return _table(lambda i, j: sub(tuple(J[j] * x for x in c.gamma[i][j]), apply_J(c.gamma[i][j])))


def nabla_J_anticommutator(nj: NablaJ) -> tuple:
    """``(∇_i J)(J e_j) + J((∇_i J) e_j)``; zero because J² = id."""
    J = PRODUCT_STRUCTURE
    return _table(
        lambda i, j: tuple(J[j] * nj.nj[i][j][k] + J[k] * nj.nj[i][j][k] for k in range(3))
    )


def connection_table(c: Connection) -> list:
    """JSON-friendly rows ``{i, j, value}`` for ``∇_{e_i} e_j``."""
    return [
        {"i": i + 1, "j": j + 1, "value": [str(x) for x in c.gamma[i][j]]}
        for i in range(3)
        for j in range(3)
    ]
