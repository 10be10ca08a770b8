from __future__ import annotations

from fractions import Fraction

from hypothesis import assume, given
from hypothesis import strategies as st

from helpers import PROPERTY, catalog_points, nonzero_vec3, rationals, vec3, zero3
from lrc.algebra import E1, E2, E3, basis, custom_algebra, make_group
from lrc.collineation import (
    ROW_ORDER,
    SolutionSpace,
    assemble_system,
    collineation_space,
    lie_derivative_form,
    null_space,
    rref,
    solve_point,
)
from lrc.curvature import is_symmetric, symmetric_ricci

ABELIAN = custom_algebra([[[0] * 3] * 3] * 3)
flavors = st.sampled_from(["canonical", "kn"])


def test_g1_lie_derivative_components():
    a = make_group("G1", {"alpha": 1, "beta": 0})
    d = lie_derivative_form(symmetric_ricci(a, "canonical"), E1, a)
    assert d[0][1] == 1
    assert d[1][1] == 0


def test_zero_field_and_abelian_algebra():
    a = make_group("G2", {"alpha": 1, "beta": 2, "gamma": 3})
    t = symmetric_ricci(a, "kn")
    assert zero3(lie_derivative_form(t, (0, 0, 0), a))
    t = ((1, 2, 3), (2, 4, 5), (3, 5, 6))
    assert zero3(lie_derivative_form(t, (1, -2, 7), ABELIAN))


def test_g1_system_first_column():
    a = make_group("G1", {"alpha": 1, "beta": 1})
    s = assemble_system(symmetric_ricci(a, "canonical"), a)
    col = [row[0] for row in s.rows]
    assert col[1:] == [Fraction(7, 4), Fraction(-3, 2), 1, Fraction(-7, 4), Fraction(3, 2)]


def test_zero_form_gives_zero_system():
    a = make_group("G1", {"alpha": 1, "beta": 1})
    s = assemble_system(((0,) * 3,) * 3, a)
    assert zero3(s.rows)
    assert null_space(s) == SolutionSpace.full()


def test_g2_kn_system_leaves_e3_free():
    a = make_group("G2", {"alpha": 0, "beta": 0, "gamma": 1})
    s = assemble_system(symmetric_ricci(a, "kn"), a)
    nonzero = {ROW_ORDER[n]: r for n, r in enumerate(s.rows) if any(r)}
    # row (1,2) kills lambda_2 and row (2,2) kills lambda_1
    assert nonzero == {(0, 1): (0, -1, 0), (1, 1): (2, 0, 0)}
    assert null_space(s) == SolutionSpace.span([E3])


def test_null_space_examples():
    assert null_space([[0, 0, 0]] * 6) == SolutionSpace(3, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    assert collineation_space(make_group("G1", {"alpha": 1, "beta": 1}), "canonical").dimension == 0
    assert collineation_space(make_group("G2", {"alpha": 4, "beta": 1, "gamma": 1}), "kn") == \
        SolutionSpace.span([(0, 1, -3)])


def test_collineation_space_examples():
    g5 = make_group("G5", {"alpha": 1, "beta": 0, "gamma": 0, "delta": 1})
    assert collineation_space(g5, "canonical").dimension == 3
    g3 = make_group("G3", {"alpha": 1, "beta": 1, "gamma": 0})
    assert collineation_space(g3, "canonical").dimension == 3
    g7 = make_group("G7", {"alpha": 0, "beta": 2, "gamma": 0, "delta": 1})
    assert collineation_space(g7, "kn") == SolutionSpace(1, ((1, -2, -2),))


def test_rref_shape():
    rows, pivots = rref([[0, 2, 4], [0, 1, 2], [1, 0, 1]])
    assert pivots == (0, 1)
    assert rows == ((1, 0, 1), (0, 1, 2))
    assert rref([]) == ((), ())


def test_diagonal_rows_carry_no_self_bracket():
    # (L_{e_i} t)(e_i, e_i) = -2 t([e_i, e_i], e_i) = 0 for any t
    a = make_group("G4", {"alpha": 3, "beta": -1, "eta": 1})
    t = ((1, 2, 3), (2, 4, 5), (3, 5, 6))
    for i in range(3):
        assert lie_derivative_form(t, basis(i), a)[i][i] == 0


@PROPERTY
@given(catalog_points(), flavors, vec3)
def test_lie_derivative_is_symmetric(point, flavor, xi):
    a = make_group(*point)
    assert is_symmetric(lie_derivative_form(symmetric_ricci(a, flavor), xi, a))


@PROPERTY
@given(catalog_points(), flavors, vec3, vec3, rationals, rationals)
def test_lie_derivative_is_linear_in_xi(point, flavor, x, y, s, u):
    a = make_group(*point)
    t = symmetric_ricci(a, flavor)
    combo = tuple(s * p + u * q for p, q in zip(x, y))
    lhs = lie_derivative_form(t, combo, a)
    dx, dy = lie_derivative_form(t, x, a), lie_derivative_form(t, y, a)
    assert lhs == tuple(tuple(s * dx[i][j] + u * dy[i][j] for j in range(3)) for i in range(3))


@PROPERTY
@given(catalog_points(), flavors, st.randoms(use_true_random=False))
def test_membership_oracle(point, flavor, rnd):
    a = make_group(*point)
    t, system, space = solve_point(a, flavor)
    for v in space.basis:
        assert zero3(lie_derivative_form(t, v, a))
        assert zero3(system.apply(v))
    if space.dimension == 3:
        return
    tried = 0
    while tried < 100:
        w = tuple(Fraction(rnd.randint(-9, 9), rnd.randint(1, 4)) for _ in range(3))
        if space.contains(w):
            continue
        tried += 1
        assert not zero3(lie_derivative_form(t, w, a))


@PROPERTY
@given(st.lists(nonzero_vec3, min_size=1, max_size=3),
       st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=3, max_size=3))
def test_rref_canonical_form_is_unique(vectors, mix):
    space = SolutionSpace.span(vectors)
    k = len(vectors)
    m = [row[:k] for row in mix[:k]]
    other = [tuple(sum(m[r][c] * vectors[c][i] for c in range(k)) for i in range(3)) for r in range(k)]
    # an invertible mixing matrix spans the same subspace
    assume(SolutionSpace.span([tuple(Fraction(x) for x in row) for row in m]).dimension == k)
    assert SolutionSpace.span(other) == space
    assert all(space.contains(v) for v in vectors)


def test_contains_and_trivial():
    line = SolutionSpace.span([(0, 2, -4)])
    assert line.basis == ((0, 1, -2),)
    assert line.contains((0, -1, 2))
    assert not line.contains(E2)
    assert SolutionSpace.trivial().contains((0, 0, 0))
    assert not SolutionSpace.trivial().contains(E1)
