"""Acceptance criteria 1-6, one test each, exact arithmetic throughout.

Tolerances are pinned: every comparison is exact (tolerance 0) and the only
numeric limits are the wall-clock budgets below.
"""
from __future__ import annotations

import random
import time
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import catalog_points, nonzero_vec3, vec3, zero3
from lrc.algebra import FAMILIES, jacobi_defect, make_group
from lrc.collineation import SolutionSpace, collineation_space, lie_derivative_form, solve_point
from lrc.connections import Flavor, connection, j_parallel_defect, levi_civita, metric_defect, torsion
from lrc.curvature import curvature, curvature_antisymmetry_defect, is_symmetric, symmetric_ricci
from lrc.lemmas import FLAVORS, check_lemmas
from lrc.sampling import random_params
from lrc.scan import MATCH, load_grid, run_scan, summarize
from lrc.theorems import det2, g2_kn_abcd, g2_kn_det_printed, g6_canonical_abcd, g6_canonical_det_printed
from lrc.tables import LIE_DERIVATIVE_TABLES, RICCI_OPERATORS

TOLERANCE = 0
POINTS = 20
BUDGET_LEMMAS = 5.0
BUDGET_ANCHORS = 1.0
BUDGET_SWEEP = 30.0
MIN_MATCH_RATE = Fraction(95, 100)
MIN_INSTANCES = 100
DET_POINTS = 50


def _lemma_criterion(kind, tables, number, verdict, budget=None):
    start = time.perf_counter()
    checks = check_lemmas(FAMILIES, FLAVORS, points=POINTS, kinds=(kind,))
    elapsed = time.perf_counter() - start
    covered = {(c.family, c.flavor) for c in checks}
    discrepancies = [d for c in checks for d in c.discrepancies]
    uncertified = [d for d in discrepancies if not d.has_certificate()]
    ok = (covered == set(tables) and all(c.points >= POINTS for c in checks)
          and not uncertified and (budget is None or elapsed < budget))
    entries = sorted({f"{d.family}/{d.flavor} {d.entry}" for d in discrepancies})
    verdict(number, ok, f"{len(checks)} tables x {POINTS} points, {len(discrepancies)} certified "
                        f"discrepancies {entries}, {elapsed:.2f}s")
    assert covered == set(tables)
    assert not uncertified
    if budget is not None:
        assert elapsed < budget


def test_criterion_1_lemma_reproduction(verdict):
    _lemma_criterion("ricci", RICCI_OPERATORS, 1, verdict, BUDGET_LEMMAS)


def test_criterion_2_lie_tables(verdict):
    _lemma_criterion("lie", LIE_DERIVATIVE_TABLES, 2, verdict)


def _anchors():
    rng = random.Random("anchors")
    span = SolutionSpace.span
    out = []
    for _ in range(3):
        p = random_params("G1", rng)
        out += [("G1", "canonical", p, SolutionSpace.trivial()), ("G1", "kn", p, SolutionSpace.trivial())]
    out.append(("G2", "kn", {"alpha": 0, "beta": 0, "gamma": 1}, span([(0, 0, 1)])))
    out.append(("G2", "kn", {"alpha": 4, "beta": 1, "gamma": 1}, span([(0, 1, -3)])))
    for b in (1, -2, Fraction(1, 3)):
        out.append(("G3", "canonical", {"alpha": 2, "beta": b, "gamma": 0}, SolutionSpace.full()))
    for a, b, c in ((1, 1, 1), (2, -3, Fraction(1, 2)), (-1, 4, 3)):
        out.append(("G3", "kn", {"alpha": a, "beta": b, "gamma": c}, span([(0, 0, 1)])))
    out.append(("G4", "kn", {"alpha": 2, "beta": 1, "eta": 1}, span([(0, 1, -1)])))
    for _ in range(20):
        p = random_params("G5", rng)
        for flavor in FLAVORS:
            out.append(("G5", flavor, p, SolutionSpace.full()))
    for c, d in ((1, 1), (2, -3), (0, 1)):
        out.append(("G6", "kn", {"alpha": 0, "beta": 0, "gamma": c, "delta": d}, SolutionSpace.full()))
    out.append(("G6", "kn", {"alpha": 1, "beta": 1, "gamma": 2, "delta": 2}, span([(0, -2, 1)])))
    out.append(("G7", "kn", {"alpha": 0, "beta": 2, "gamma": 0, "delta": 1}, span([(1, -2, -2)])))
    for b in (1, -2, Fraction(3, 4)):
        out.append(("G7", "canonical", {"alpha": 1, "beta": b, "gamma": 0, "delta": 0}, span([(0, 1, 1)])))
    return out


def test_criterion_3_theorem_anchors(verdict):
    anchors = _anchors()
    start = time.perf_counter()
    failed = [(f, fl, p) for f, fl, p, expected in anchors
              if collineation_space(make_group(f, p), fl) != expected]
    elapsed = time.perf_counter() - start
    ok = not failed and elapsed < BUDGET_ANCHORS
    verdict(3, ok, f"{len(anchors) - len(failed)}/{len(anchors)} anchors exact, {elapsed:.3f}s")
    assert not failed
    assert elapsed < BUDGET_ANCHORS


def test_criterion_4_full_sweep(verdict):
    start = time.perf_counter()
    reports = run_scan(load_grid())
    elapsed = time.perf_counter() - start
    summary = summarize(reports)
    rate = Fraction(summary["counts"][MATCH], summary["total"])
    certs = [r.certificate for r in reports if r.verdict != MATCH]
    certified = all(c and len(c["system"]) == 6 and c["rref"] is not None and c["case_id"] for c in certs)
    g2_listed = any(c["case_id"] == "G2/canonical/(2)" for c in certs)
    ok = rate >= MIN_MATCH_RATE and certified and g2_listed and elapsed < BUDGET_SWEEP
    verdict(4, ok, f"{summary['total']} reports, match rate {float(rate):.4f} "
                   f"(need {float(MIN_MATCH_RATE):.2f}), {len(certs)} certificates, "
                   f"non-Match by case {summary['non_match_by_case']}, {elapsed:.1f}s")
    assert certified and g2_listed
    assert elapsed < BUDGET_SWEEP
    assert rate >= MIN_MATCH_RATE


def _run_suite(name, test, counter, results):
    counter[name] = 0
    try:
        test()
        results[name] = counter[name] >= MIN_INSTANCES
    except AssertionError:
        results[name] = False


def test_criterion_5_property_suites(verdict):
    runs = settings(max_examples=120, deadline=None, database=None, derandomize=True)
    counter, results = {}, {}

    def tick(name):
        counter[name] += 1

    @runs
    @given(catalog_points())
    def jacobi(point):
        tick("jacobi")
        assert zero3(jacobi_defect(make_group(*point)))

    @runs
    @given(catalog_points())
    def levi_civita_torsion_free_metric(point):
        tick("levi_civita_torsion_free_metric")
        a = make_group(*point)
        lc = levi_civita(a)
        assert zero3(torsion(lc, a)) and zero3(metric_defect(lc))

    def connection_suite(flavor, defect, name):
        @runs
        @given(catalog_points())
        def suite(point):
            tick(name)
            assert zero3(defect(connection(make_group(*point), flavor)))
        return name, suite

    @runs
    @given(catalog_points(), st.sampled_from([Flavor.CANONICAL, Flavor.KOBAYASHI_NOMIZU]))
    def curvature_antisymmetry(point, flavor):
        tick("curvature_antisymmetry")
        a = make_group(*point)
        assert zero3(curvature_antisymmetry_defect(curvature(connection(a, flavor), a)))

    @runs
    @given(catalog_points(), st.sampled_from(FLAVORS), vec3, vec3, st.fractions(-3, 3, max_denominator=4))
    def lie_symmetry_and_linearity(point, flavor, x, y, s):
        tick("lie_symmetry_and_linearity")
        a = make_group(*point)
        t = symmetric_ricci(a, flavor)
        dx, dy = lie_derivative_form(t, x, a), lie_derivative_form(t, y, a)
        combo = lie_derivative_form(t, tuple(u + s * v for u, v in zip(x, y)), a)
        assert is_symmetric(dx)
        assert combo == tuple(tuple(dx[i][j] + s * dy[i][j] for j in range(3)) for i in range(3))

    @runs
    @given(catalog_points(), st.sampled_from(FLAVORS), st.randoms(use_true_random=False))
    def membership_oracle(point, flavor, rnd):
        tick("membership_oracle")
        a = make_group(*point)
        t, _, space = solve_point(a, flavor)
        assert all(zero3(lie_derivative_form(t, v, a)) for v in space.basis)
        tried = 0
        while space.dimension < 3 and tried < 100:
            w = tuple(Fraction(rnd.randint(-9, 9), rnd.randint(1, 4)) for _ in range(3))
            if not space.contains(w):
                tried += 1
                assert not zero3(lie_derivative_form(t, w, a))

    @runs
    @given(st.lists(nonzero_vec3, min_size=1, max_size=3), st.integers(-5, 5), st.integers(1, 5))
    def rref_uniqueness(vectors, shear, scale):
        tick("rref_uniqueness")
        # a second basis of the same span: scale the first vector, shear the rest by it
        other = [tuple(scale * x for x in vectors[0])]
        other += [tuple(x + shear * y for x, y in zip(v, vectors[0])) for v in vectors[1:]]
        assert SolutionSpace.span(other) == SolutionSpace.span(vectors)

    suites = [
        ("jacobi", jacobi),
        ("levi_civita_torsion_free_metric", levi_civita_torsion_free_metric),
        connection_suite(Flavor.CANONICAL, metric_defect, "canonical_metric"),
        connection_suite(Flavor.CANONICAL, j_parallel_defect, "canonical_j_parallel"),
        connection_suite(Flavor.KOBAYASHI_NOMIZU, metric_defect, "kn_metric"),
        connection_suite(Flavor.KOBAYASHI_NOMIZU, j_parallel_defect, "kn_j_parallel"),
        ("curvature_antisymmetry", curvature_antisymmetry),
        ("lie_symmetry_and_linearity", lie_symmetry_and_linearity),
        ("membership_oracle", membership_oracle),
        ("rref_uniqueness", rref_uniqueness),
    ]
    for name, suite in suites:
        _run_suite(name, suite, counter, results)
    failed = [n for n, passed in results.items() if not passed]
    verdict(5, not failed, f"{len(results) - len(failed)}/{len(results)} suites, "
                           f">= {MIN_INSTANCES} instances each; failing: {failed}")
    assert not failed


def test_criterion_6_determinant_identities(verdict):
    rng = random.Random("determinants")
    g2 = [random_params("G2", rng) for _ in range(DET_POINTS)]
    g6 = [random_params("G6", rng) for _ in range(DET_POINTS)]
    g2_agree = sum(abs(det2(g2_kn_abcd(p)) - g2_kn_det_printed(p)) <= TOLERANCE for p in g2)
    g6_agree = sum(abs(det2(g6_canonical_abcd(p)) - g6_canonical_det_printed(p)) <= TOLERANCE
                   for p in g6)
    ok = g2_agree == DET_POINTS and g6_agree == DET_POINTS
    verdict(6, ok, f"G2-kn agrees at {g2_agree}/{DET_POINTS}, G6-canonical at {g6_agree}/{DET_POINTS}")
    assert g2_agree == DET_POINTS
    assert g6_agree == DET_POINTS
