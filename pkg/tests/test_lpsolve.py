from fractions import Fraction as F

from hypothesis import given, settings
from hypothesis import strategies as st

from polytangent import exactnum as en
from polytangent.lpsolve import (
    Feasible,
    Infeasible,
    InequalitySystem,
    Row,
    feasible,
    separating_hyperplane,
    solve_lp,
)
from polytangent.polytope import convex_hull

from conftest import box


def system(rows, n):
    return InequalitySystem(tuple(Row(a, b, r) for a, b, r in rows), n)


def test_open_interval():
    res = feasible(system([((1,), 0, ">"), ((1,), 1, "<")], 1))
    assert isinstance(res, Feasible)
    assert res.witness == (F(1, 2),)
    assert res.slack == F(1, 2)


def test_contradiction():
    assert isinstance(feasible(system([((1,), 0, ">"), ((1,), 0, "<")], 1)), Infeasible)


def test_unbounded_slack_is_capped():
    res = feasible(system([((1,), 0, ">")], 1))
    assert isinstance(res, Feasible) and res.slack == 1


def test_solve_lp_small():
    status, z, val = solve_lp([(1, 1)], ["<="], [4], (1, 2))
    assert status == "optimal" and val == 8
    assert solve_lp([(1, 1)], [">="], [4], (1, 2))[0] == "unbounded"
    assert solve_lp([(1,), (1,)], ["<=", ">="], [1, 2], (1,))[0] == "infeasible"


def test_marked_square_edge():
    P = convex_hull(box((0, 0), (1, 1)))
    top = next(j for j, f in enumerate(P.facets) if f.hyperplane.normal == (0, 1))
    rows = [
        (f.hyperplane.normal, f.hyperplane.offset, ">" if j == top else "<")
        for j, f in enumerate(P.facets)
    ]
    res = feasible(system(rows, 2))
    assert isinstance(res, Feasible)
    x = res.witness
    assert x[1] > 1 and 0 < x[0] < 1


def test_separating_examples():
    H = separating_hyperplane([(0, 0)], [(1, 0)])
    assert H.normal[0] > 0
    assert separating_hyperplane([(0, 0)], [(0, 0)]) is None
    A, B = box((0, 0), (1, 1)), box((3, 0), (4, 1))
    H = separating_hyperplane(A, B)
    assert all(H.value(p) < 0 for p in A) and all(H.value(p) > 0 for p in B)
    assert separating_hyperplane(B, A) == H.flipped()


def test_proper_separation_of_touching_sets():
    A, B = box((0, 0), (1, 1)), box((1, 0), (2, 1))
    assert separating_hyperplane(A, B) is None
    H = separating_hyperplane(A, B, strict=False)
    assert all(H.value(p) <= 0 for p in A) and all(H.value(p) >= 0 for p in B)


def test_row_generation_matches_full_solve():
    rows = [((1, k), k * k, ">") for k in range(-12, 13)]
    s = system(rows, 2)
    a, b = feasible(s, chunk=3), feasible(s, chunk=len(rows))
    assert isinstance(a, Feasible) and isinstance(b, Feasible)
    assert all(r.holds(a.witness) for r in s.rows)


coef = st.integers(-4, 4)
row_st = st.tuples(st.tuples(coef, coef), st.integers(-6, 6), st.sampled_from(["<", ">", "<=", ">="]))


@settings(max_examples=60, deadline=None)
@given(st.lists(row_st, min_size=1, max_size=7), row_st)
def test_witness_resubstitutes_and_monotone(rows, extra):
    s = system(rows, 2)
    res = feasible(s)
    if isinstance(res, Feasible):
        assert all(r.holds(res.witness) for r in s.rows)
    else:
        assert isinstance(feasible(s.with_row(Row(*extra))), Infeasible)


pts = st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=1, max_size=5)


@settings(max_examples=40, deadline=None)
@given(pts, pts)
def test_separation_flip_symmetry(A, B):
    H = separating_hyperplane(A, B)
    G = separating_hyperplane(B, A)
    assert (H is None) == (G is None)
    if H is not None:
        assert G == H.flipped()
        assert all(H.value(en.vec(p)) < 0 for p in A)
