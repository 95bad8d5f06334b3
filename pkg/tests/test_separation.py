from fractions import Fraction as F

import pytest

from polytangent import exactnum as en
from polytangent.polytope import convex_hull, interior_point, polar_dual, translate
from polytangent.separation import (
    COVISIBLE,
    NEITHER,
    VISIBLE,
    Family,
    bipartitions,
    classify_color_subsets,
    first_neither,
    is_strongly_separated,
    simplicial_simplex,
    visibility_witness,
    visible_facets,
)
from polytangent.errors import PointInsidePolytope

from conftest import box, four_prisms, random_family, random_polytope, two_squares

BIG_TRIANGLE = [
    [(0, 0), (1, 0), (0, 1)],
    [(20, 0), (21, 0), (20, 1)],
    [(10, 17), (11, 17), (10, 18)],
]


def test_bipartition_count():
    assert len(list(bipartitions(4))) == 7
    assert all(0 in I for I in bipartitions(5))


def test_two_squares_one_witness():
    cert = is_strongly_separated(two_squares())
    assert cert.ok and len(cert.witnesses) == 1
    (I, H), = cert.witnesses.items()
    F_ = two_squares()
    assert all(H.value(v) < 0 for v in F_.vertices(0))
    assert all(H.value(v) > 0 for v in F_.vertices(1))


def test_four_prisms_fail_on_diagonals():
    cert = is_strongly_separated(four_prisms())
    assert not cert.ok
    assert cert.failing == frozenset({0, 2})


def test_four_prisms_singletons_separate():
    from polytangent.lpsolve import separating_hyperplane

    fam = four_prisms()
    for i in range(4):
        rest = fam.union([j for j in range(4) if j != i])
        assert separating_hyperplane(fam.vertices(i), rest) is not None


def test_three_triangles_in_a_row():
    bent = Family.from_points([box((0, 0), (1, 1)), box((10, 5), (11, 6)), box((20, 0), (21, 1))], 2)
    cert = is_strongly_separated(bent)
    assert cert.ok and len(cert.witnesses) == 3
    flat = Family.from_points([box((0, 0), (1, 1)), box((10, 0), (11, 1)), box((20, 0), (21, 1))], 2)
    assert is_strongly_separated(flat).failing == frozenset({0, 2})


def test_separation_invariant_under_permutation_and_affine_maps(rng):
    for _ in range(5):
        fam = random_family(rng, 2, m=3)
        perm = list(range(3))
        rng.shuffle(perm)
        assert is_strongly_separated(fam.subfamily(perm)).ok
        mapped = fam.mapped(lambda v: (2 * v[0] + v[1] + 7, v[0] + v[1] - 3))
        assert is_strongly_separated(mapped).ok
    assert not is_strongly_separated(four_prisms().subfamily([3, 1, 2, 0])).ok


def test_visible_facets_of_square():
    P = convex_hull(box((0, 0), (1, 1)))
    idx = {f.hyperplane.normal: j for j, f in enumerate(P.facets)}
    assert visible_facets(P, (F(1, 2), 2)) == {idx[(0, 1)]}
    assert visible_facets(P, (2, 2)) == {idx[(0, 1)], idx[(1, 0)]}
    with pytest.raises(PointInsidePolytope):
        visible_facets(P, (F(1, 2), F(1, 2)))


def _segment_sees(P, facet, p):
    """P meets [q, p] only in q, for q the centroid of the facet."""
    q = en.centroid([P.vertices[j] for j in P.facets[facet].vertices])
    direction = en.sub(p, q)
    hi = F(1)
    for f in P.facets:
        h = f.hyperplane
        slope = en.dot(h.normal, direction)
        room = h.offset - en.dot(h.normal, q)
        if slope > 0:
            hi = min(hi, room / slope)
    return hi == 0


def test_visible_facets_match_segment_oracle(rng):
    for d in (2, 3):
        for _ in range(6):
            P = random_polytope(rng, d)
            p = tuple(F(rng.randint(-40, 40), 3) for _ in range(d))
            if P.contains(p):
                continue
            oracle = {j for j in range(len(P.facets)) if _segment_sees(P, j, p)}
            assert visible_facets(P, p) == oracle


def test_visibility_witness_square():
    P = convex_hull(box((0, 0), (1, 1)))
    top = next(j for j, f in enumerate(P.facets) if f.hyperplane.normal == (0, 1))
    coloring = {j: 2 if j == top else 1 for j in range(4)}
    w = visibility_witness(P, coloring, {2})
    assert visible_facets(P, w) == {top}
    assert visibility_witness(P, coloring, {1}) is None
    with pytest.raises(ValueError):
        visibility_witness(P, coloring, {1, 2})


def polarity_coloring(F_):
    """Polar of the union hull, facet i colored by the owner of hull vertex i."""
    owner = {v: i for i, P in enumerate(F_.members) for v in P.vertices}
    hull = convex_hull(F_.all_vertices(), F_.d)
    hull = translate(hull, en.neg(interior_point(hull)))
    c = interior_point(convex_hull(F_.all_vertices(), F_.d))
    Q = polar_dual(hull)
    return Q, {i: owner[en.add(v, c)] for i, v in enumerate(hull.vertices)}


def test_polarity_coloring_visible_or_covisible(rng):
    for d, m in ((2, 2), (3, 2), (3, 3)):
        for _ in range(2):
            fam = random_family(rng, d, m=m)
            Q, coloring = polarity_coloring(fam)
            report = classify_color_subsets(Q, coloring)
            assert len(report) == 2**m - 2
            assert first_neither(report) is None
            for I, c in report.items():
                want = I if c.kind == VISIBLE else set(coloring.values()) - I
                assert c.kind in (VISIBLE, COVISIBLE)
                assert visible_facets(Q, c.witness) == {j for j, col in coloring.items() if col in want}


def test_cube_with_opposite_colors_has_neither():
    P = convex_hull(box((-1, -1, -1), (1, 1, 1)))
    coloring = {j: next(k for k, x in enumerate(f.hyperplane.normal) if x) for j, f in enumerate(P.facets)}
    report = classify_color_subsets(P, coloring)
    assert any(c.kind == NEITHER for c in report.values())


def test_single_color_report_is_empty():
    P = convex_hull(box((0, 0), (1, 1)))
    assert classify_color_subsets(P, {j: 1 for j in range(4)}) == {}


def test_simplicial_simplex_big_triangle():
    fam = Family.from_points(BIG_TRIANGLE, 2)
    S = simplicial_simplex(fam)
    assert S is not None
    assert is_strongly_separated(fam).ok
    for j, P in enumerate(fam.members):
        for v in P.vertices:
            assert S.hyperplanes[j].value(v) > 0
            assert all(S.hyperplanes[i].value(v) <= 0 for i in range(3) if i != j)
    for x in S.vertices:
        assert all(H.value(x) >= 0 for H in S.hyperplanes)
    assert en.orientation(S.vertices) != 0


def test_simplicial_simplex_fails_on_pinwheel():
    fam = Family.from_points(
        [[(-1, 2), (2, 1), (3, 2)], [(-4, -1), (-6, 4), (-5, 5)], [(2, -5), (0, -1), (1, 0)]], 2
    )
    assert is_strongly_separated(fam).ok
    assert simplicial_simplex(fam) is None


def test_simplicial_simplex_d1_gap():
    fam = Family.from_points([[(0,), (1,)], [(3,), (4,)]], 1)
    S = simplicial_simplex(fam)
    assert sorted(S.vertices) == [(1,), (3,)]


def test_simplicial_implies_strong(rng):
    # unfiltered random triples: whenever S exists the family must separate
    hits = 0
    for _ in range(40):
        members = []
        for _ in range(3):
            x, y = rng.randint(-8, 8), rng.randint(-8, 8)
            members.append([(x, y), (x + rng.randint(1, 4), y), (x, y + rng.randint(1, 4))])
        fam = Family.from_points(members, 2)
        try:
            S = simplicial_simplex(fam)
        except Exception:
            continue
        if S is not None:
            hits += 1
            assert is_strongly_separated(fam).ok
    assert hits
