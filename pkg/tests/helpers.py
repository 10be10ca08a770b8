from __future__ import annotations

from fractions import Fraction

from hypothesis import assume, settings
from hypothesis import strategies as st

from lrc.algebra import FAMILIES, ConstraintViolation, Params, check_constraints

PROPERTY = settings(max_examples=120, deadline=None)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
nonzero = rationals.filter(bool)
vec3 = st.tuples(rationals, rationals, rationals)
nonzero_vec3 = vec3.filter(any)


@st.composite
def catalog_points(draw, families=FAMILIES):
    """A family name and an exact point on its constraint set."""
    family = draw(st.sampled_from(families))
    a, b, c, d = (draw(rationals) for _ in range(4))
    eta = draw(st.sampled_from((1, -1))) if family == "G4" else None
    if family in ("G5", "G6"):
        sign = -1 if family == "G5" else 1
        if b != 0:
            d = sign * a * c / b
        elif draw(st.booleans()):
            a = Fraction(0)
        else:
            c = Fraction(0)
    elif family == "G7":
        if draw(st.booleans()):
            a = Fraction(0)
        else:
            c = Fraction(0)
    p = Params(a, b, c, d, eta)
    try:
        check_constraints(family, p)
    except ConstraintViolation:
        assume(False)
    return family, p


def zero3(t) -> bool:
    """True when a nested tuple of fractions is identically zero."""
    if isinstance(t, (tuple, list)):
        return all(zero3(x) for x in t)
    return t == 0
