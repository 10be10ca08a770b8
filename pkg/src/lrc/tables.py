"""Printed closed forms for the symmetrized Ricci operators and their Lie derivatives.

Each Ricci entry is a row-convention operator matrix (row i = image of e_i).
Each Lie-derivative table maps ``(k, i, j)`` (1-based) to the printed value of
``(L_{e_k} Ric~)(e_i, e_j)``.  Only printed components appear; abbreviations
such as ``a_3`` or ``b_3`` are expanded inline.
"""
from __future__ import annotations

from fractions import Fraction

from .algebra import Params

H = Fraction(1, 2)
Q = Fraction(1, 4)


def _abcd(p: Params):
    return p.alpha, p.beta, p.gamma, p.delta


# -- Ricci operators ------------------------------------------------------------

def _g1_can(p):
    a, b, _, _ = _abcd(p)
    s = -(a * a + b * b / 2)
    return [[s, 0, -a * b / 4], [0, s, -a * a / 2], [a * b / 4, a * a / 2, 0]]


def _g1_kn(p):
    a, b, _, _ = _abcd(p)
    s = -(a * a + b * b)
    return [[s, a * b, a * b / 2], [a * b, s, -a * a / 2], [-a * b / 2, a * a / 2, 0]]


def _g2_can(p):
    a, b, c, _ = _abcd(p)
    s = -(c * c + a * b / 2)
    return [[s, 0, 0], [0, s, a * c / 4 - b * c / 2], [0, b * c / 2 - a * c / 4, 0]]


def _g2_kn(p):
    a, b, c, _ = _abcd(p)
    return [[-(b * b + c * c), 0, 0], [0, -(c * c + a * b), a * c / 2], [0, -a * c / 2, 0]]


def _g3_a(p):
    a, b, c, _ = _abcd(p)
    return H * (a - b - c), H * (a - b + c), H * (a + b - c)


def _g3_can(p):
    c = p.gamma
    a3 = _g3_a(p)[2]
    return [[-c * a3, 0, 0], [0, -c * a3, 0], [0, 0, 0]]


def _g3_kn(p):
    c = p.gamma
    a1, a2, a3 = _g3_a(p)
    return [[c * (a1 - a3), 0, 0], [0, -c * (a2 + a3), 0], [0, 0, 0]]


def _g4_b(p):
    a, b, eta = p.alpha, p.beta, p.eta
    return a / 2 + eta - b, a / 2 - eta, a / 2 + eta


def _g4_can(p):
    b, eta = p.beta, p.eta
    b3 = _g4_b(p)[2]
    s = (2 * eta - b) * b3 - 1
    return [[s, 0, 0], [0, s, (b - b3) / 2], [0, (b3 - b) / 2, 0]]


def _g4_kn(p):
    a, b, eta = p.alpha, p.beta, p.eta
    b1, b2, b3 = _g4_b(p)
    return [
        [-(1 + (b - 2 * eta) * (b3 - b1)), 0, 0],
        [0, -(1 + (b - 2 * eta) * (b2 + b3)), (b1 + b - a - b3) / 2],
        [0, (a + b3 - b1 - b) / 2, 0],
    ]


def _zero(p):
    return [[0, 0, 0], [0, 0, 0], [0, 0, 0]]


def _g6_can(p):
    a, b, c, d = _abcd(p)
    s = H * b * (b - c) - a * a
    off = H * (c * a - H * d * (b - c))
    return [[s, 0, 0], [0, s, off], [0, -off, 0]]


def _g6_kn(p):
    a, b, c, _ = _abcd(p)
    return [[-(a * a + b * c), 0, 0], [0, -a * a, 0], [0, 0, 0]]


def _g7_can(p):
    a, b, c, d = _abcd(p)
    s = a * a + b * c / 2
    q = H * (c * a + d * c / 2)
    return [[-s, 0, q], [0, -s, -H * s], [-q, H * s, 0]]


def _g7_kn(p):
    a, b, c, d = _abcd(p)
    x = H * (b * d - a * b)
    y = b * (a + d)
    z = H * (b * c + a * d + 2 * d * d)
    return [[-a * a, x, -y], [x, -(a * a + b * b + b * c), -z], [y, z, 0]]


RICCI_OPERATORS = {
    ("G1", "canonical"): _g1_can,
    ("G1", "kn"): _g1_kn,
    ("G2", "canonical"): _g2_can,
    ("G2", "kn"): _g2_kn,
    ("G3", "canonical"): _g3_can,
    ("G3", "kn"): _g3_kn,
    ("G4", "canonical"): _g4_can,
    ("G4", "kn"): _g4_kn,
    ("G5", "canonical"): _zero,
    ("G5", "kn"): _zero,
    ("G6", "canonical"): _g6_can,
    ("G6", "kn"): _g6_kn,
    ("G7", "canonical"): _g7_can,
    ("G7", "kn"): _g7_kn,
}


# -- Lie-derivative tables --------------------------------------------------------

def _g1_can_lie(p):
    a, b, _, _ = _abcd(p)
    a2, b2 = a * a, b * b
    return {
        (1, 1, 2): a * (a2 + 3 * Q * b2),
        (1, 1, 3): -a * (a2 + H * b2),
        (1, 2, 2): a2 * b,
        (1, 2, 3): -b * (Fraction(5, 4) * a2 + H * b2),
        (1, 3, 3): Fraction(3, 2) * a2 * b,
        (2, 1, 1): -2 * a * (a2 + 3 * Q * b2),
        (2, 1, 2): -H * a2 * b,
        (2, 1, 3): b * (a2 + H * b2),
        (2, 2, 3): H * a * (a2 + b2),
        (2, 3, 3): -a * (a2 + H * b2),
        (3, 1, 1): 2 * a * (a2 + H * b2),
        (3, 1, 2): Q * a2 * b,
        (3, 1, 3): -3 * Q * a2 * b,
        (3, 2, 2): -a * (a2 + b2),
        (3, 2, 3): H * a * (a2 + H * b2),
    }


def _g1_kn_lie(p):
    a, b, _, _ = _abcd(p)
    a2, b2 = a * a, b * b
    return {
        (1, 1, 2): a * (a2 + H * b2),
        (1, 1, 3): -a2 * a,
        (1, 2, 2): -a2 * b,
        (1, 2, 3): b * (H * a2 - b2),
        (1, 3, 3): Fraction(0),
        (2, 1, 1): -2 * a * (a2 + H * b2),
        (2, 1, 2): H * a2 * b,
        (2, 1, 3): b2 * b,
        (2, 2, 3): H * a2 * a,
        (2, 3, 3): a * (b2 - a2),
        (3, 1, 1): 2 * a2 * a,
        (3, 1, 2): -H * a2 * b,
        (3, 1, 3): Fraction(0),
        (3, 2, 2): -a2 * a,
        (3, 2, 3): H * a * (a2 - b2),
    }


def _g2_can_lie(p):
    a, b, c, _ = _abcd(p)
    return {
        (1, 1, 2): 0,
        (1, 1, 3): 0,
        (1, 2, 2): c * (2 * c * c + b * b + H * a * b),
        (1, 2, 3): -b * (c * c + H * a * b),
        (1, 3, 3): b * (b * c - H * a * c),
        (2, 1, 1): 0,
        (2, 1, 2): -c * (c * c + H * b * b + Q * a * b),
        (2, 1, 3): H * c * c * (b + Fraction(3, 2) * a) + H * a * a * b,
        (2, 2, 3): 0,
        (2, 3, 3): 0,
        (3, 1, 1): 0,
        (3, 1, 2): H * c * c * (b - Fraction(3, 2) * a) + H * a * b * (b - a),
        (3, 1, 3): H * b * c * (H * a - b),
        (3, 2, 2): 0,
        (3, 2, 3): 0,
    }


def _g2_kn_lie(p):
    a, b, c, _ = _abcd(p)
    return {
        (1, 1, 2): 0,
        (1, 1, 3): 0,
        (1, 2, 2): 2 * c * (c * c + H * a * b),
        (1, 2, 3): -b * (c * c + a * b),
        (1, 3, 3): -a * b * c,
        (2, 1, 1): 0,
        (2, 1, 2): -c * (c * c + H * a * b),
        (2, 1, 3): a * (b * b + H * c * c),
        (2, 2, 3): 0,
        (2, 3, 3): 0,
        (3, 1, 1): 0,
        (3, 1, 2): c * c * (b - H * a),
        (3, 1, 3): H * a * b * c,
        (3, 2, 2): 0,
        (3, 2, 3): 0,
    }


_ZERO_KEYS = (
    (1, 1, 2), (1, 1, 3), (1, 2, 2), (1, 2, 3), (1, 3, 3),
    (2, 1, 1), (2, 1, 2), (2, 1, 3), (2, 2, 3), (2, 3, 3),
    (3, 1, 1), (3, 1, 2), (3, 1, 3), (3, 2, 2), (3, 2, 3),
)


def _with_zeros(values: dict) -> dict:
    out = {k: Fraction(0) for k in _ZERO_KEYS}
    out.update(values)
    return out


def _g3_can_lie(p):
    a, b, c, _ = _abcd(p)
    a3 = _g3_a(p)[2]
    return _with_zeros({
        (1, 2, 3): -b * c * a3,
        (2, 1, 3): a * c * a3,
        (3, 1, 2): (b - a) * c * a3,
    })


def _g3_kn_lie(p):
    a, b, c, _ = _abcd(p)
    a1, a2, a3 = _g3_a(p)
    return _with_zeros({
        (1, 2, 3): -b * c * (a2 + a3),
        (2, 1, 3): a * c * (a3 - a1),
        (3, 1, 2): b * c * (a2 + a3) + a * c * (a1 - a3),
    })


def _g4_can_lie(p):
    a, b, eta = p.alpha, p.beta, p.eta
    b3 = _g4_b(p)[2]
    s = (2 * eta - b) * b3 - 1
    return _with_zeros({
        (1, 2, 2): (2 * eta - b) * (b3 + b) - 2,
        (1, 2, 3): b * s,
        (1, 3, 3): b * (b3 - b),
        (2, 1, 2): (b3 + b) * (H * b - eta) + 1,
        (2, 1, 3): a * ((b - 2 * eta) * b3 + 1) + H * (b - b3),
        (3, 1, 2): (a - b) * s + H * (b3 - b),
        (3, 1, 3): H * b * (b - b3),
    })


def _g4_kn_lie(p):
    a, b, eta = p.alpha, p.beta, p.eta
    m = b - 2 * eta
    return _with_zeros({
        (1, 2, 2): -2 - a * m,
        (1, 2, 3): -b * (1 + a * m),
        (1, 3, 3): a * b,
        (2, 1, 2): 1 + H * a * m,
        (2, 1, 3): a * (H + b * m),
        (3, 1, 2): b - a / 2,
        (3, 1, 3): -H * a * b,
    })


def _g5_lie(p):
    return _with_zeros({})


def _g6_can_lie(p):
    a, b, c, d = _abcd(p)
    w = -a * c + H * d * (b - c)
    return _with_zeros({
        (1, 2, 2): 2 * a ** 3 + a * b * c - b * (b - c) * (a + H * d),
        (1, 2, 3): H * a * c * (3 * a + d) + H * (c - b) * (a * d + d * d + b * c),
        (1, 3, 3): c * (a * c + H * d * (c - b)),
        (2, 1, 2): -a ** 3 - H * a * b * c + H * b * (b - c) * (a + H * d),
        (2, 1, 3): H * a * w,
        (3, 1, 2): -a * a * c - H * a * c * d + H * (b - c) * (b * c + H * d * d),
        (3, 1, 3): H * c * w,
    })


def _g6_kn_lie(p):
    a, b, c, d = _abcd(p)
    return _with_zeros({
        (1, 2, 2): 2 * a ** 3,
        (1, 2, 3): a * a * c,
        (2, 1, 2): -a ** 3,
        (3, 1, 2): -a * a * c,
    })


def _g7_can_lie(p):
    a, b, c, d = _abcd(p)
    s = a * a + H * b * c
    return {
        (1, 1, 2): -a ** 3 - Q * b * d * c,
        (1, 1, 3): a ** 3 + Q * b * d * c,
        (1, 2, 2): -b * s,
        (1, 2, 3): b * s,
        (1, 3, 3): -b * s,
        (2, 1, 1): 2 * a ** 3 + H * b * d * c,
        (2, 1, 2): H * b * s,
        (2, 1, 3): Q * c * (d * d - b * b) + H * b * (c * c - a * a),
        (2, 2, 3): H * d * s,
        (2, 3, 3): d * (H * c * c - a * a - H * b * c),
        (3, 1, 1): -2 * a ** 3 - H * b * d * c,
        (3, 1, 2): -(c + H * b) * s - Q * d * d * c,
        (3, 1, 3): H * b * s,
        (3, 2, 2): -d * s,
        (3, 2, 3): -Q * d * c * c + H * d * s,
    }


def _g7_kn_lie(p):
    a, b, c, d = _abcd(p)
    u = b * b * (3 * d + a)
    return {
        (1, 1, 2): -a ** 3 + H * u,
        (1, 1, 3): a ** 3 - H * u,
        (1, 2, 2): b * (2 * a * d - 3 * a * a - 2 * b * b - b * c + 2 * d * d),
        (1, 2, 3): b * (Fraction(5, 2) * a * a + H * a * d + b * b + b * c),
        (1, 3, 3): -b * (2 * a * a + 3 * a * d + b * c + 2 * d * d),
        (2, 1, 1): 2 * a * a - u,
        (2, 1, 2): H * b * (3 * a * a + 2 * b * b + b * c - 2 * a * d - 2 * d * d),
        (2, 1, 3): -b * (a * a + Fraction(5, 2) * d * d + 2 * a * d + H * b * c),
        (2, 2, 3): d * (a * a + b * b - d * d - H * a * d),
        (2, 3, 3): -d * (3 * b * c + a * d + 2 * d * d),
        (3, 1, 1): -2 * a ** 3 + u,
        (3, 1, 2): H * b * (5 * d * d - 3 * a * a - 2 * b * b - b * c + 3 * a * d),
        (3, 1, 3): H * b * (2 * a * a + 3 * a * d + b * c + 2 * d * d),
        (3, 2, 2): d * (2 * d * d + a * d - 2 * a * a - 2 * b * b),
        (3, 2, 3): H * d * (3 * b * c + a * d + 2 * d * d),
    }


LIE_DERIVATIVE_TABLES = {
    ("G1", "canonical"): _g1_can_lie,
    ("G1", "kn"): _g1_kn_lie,
    ("G2", "canonical"): _g2_can_lie,
    ("G2", "kn"): _g2_kn_lie,
    ("G3", "canonical"): _g3_can_lie,
    ("G3", "kn"): _g3_kn_lie,
    ("G4", "canonical"): _g4_can_lie,
    ("G4", "kn"): _g4_kn_lie,
    ("G5", "canonical"): _g5_lie,
    ("G5", "kn"): _g5_lie,
    ("G6", "canonical"): _g6_can_lie,
    ("G6", "kn"): _g6_kn_lie,
    ("G7", "canonical"): _g7_can_lie,
    ("G7", "kn"): _g7_kn_lie,
}


def printed_ricci_operator(family: str, flavor: str, p: Params):
    return [[Fraction(x) for x in row] for row in RICCI_OPERATORS[(family, flavor)](p)]


def printed_lie_table(family: str, flavor: str, p: Params) -> dict:
    return {k: Fraction(v) for k, v in LIE_DERIVATIVE_TABLES[(family, flavor)](p).items()}
