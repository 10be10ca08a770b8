"""Exact random parameter points that satisfy each family's constraints by construction."""
from __future__ import annotations

import random
from fractions import Fraction

from .algebra import ConstraintViolation, Params, check_constraints


def random_rational(rng: random.Random, bound: int = 6, max_den: int = 5, nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))
        if x or not nonzero:
            return x


def random_params(family: str, rng: random.Random, generic: bool = True) -> Params:
    """Draw a constraint-satisfying point.

    Constrained families use a solution parameterization of their equation
    (e.g. ``delta = -alpha*gamma/beta`` for G5) instead of filtering, so every
    returned point satisfies the equations exactly.  ``generic=True`` draws
    free parameters from nonzero rationals.
    """
    def r():
        return random_rational(rng, nonzero=generic)

    for _ in range(1000):
        if family in ("G1", "G2", "G3"):
            p = Params(r(), r(), r())
        elif family == "G4":
            p = Params(r(), r(), eta=rng.choice((1, -1)))
        elif family in ("G5", "G6"):
            al, be, ga = r(), r(), r()
            sign = -1 if family == "G5" else 1
            if rng.random() < 0.2:
                # beta = 0 forces alpha*gamma = 0
                be = Fraction(0)
                if rng.random() < 0.5:
                    al = Fraction(0)
                else:
                    ga = Fraction(0)
                de = random_rational(rng, nonzero=generic)
            elif be == 0:
                continue
            else:
                de = sign * al * ga / be
            p = Params(al, be, ga, de)
        elif family == "G7":
            al, be, ga, de = r(), r(), r(), r()
            if rng.random() < 0.5:
                al = Fraction(0)
            else:
                ga = Fraction(0)
            p = Params(al, be, ga, de)
        else:
            raise ValueError(f"unknown family {family!r}")
        try:
            check_constraints(family, p)
        except ConstraintViolation:
            continue
        return p
    raise RuntimeError(f"could not sample a valid {family} point")
