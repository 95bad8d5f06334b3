"""One test per acceptance criterion.  Each prints a PASS/FAIL line, and the
lines are repeated in the terminal summary."""

import random
import time
from collections import Counter
from fractions import Fraction as F

import pytest

from polytangent import exactnum as en
from polytangent.approx import (
    BodySpec,
    analytic_circle_tangents,
    angle_between,
    convergence_run,
    ngon_pyramid_demo,
    unit_form,
)
from polytangent.complexes import tangent_complex, verify_sphere
from polytangent.polytope import OrientedHyperplane, convex_hull, interior_point, polar_dual, translate
from polytangent.separation import (
    Family,
    is_strongly_separated,
    visibility_witness,
    visible_facets,
)
from polytangent.tangents import (
    Partition,
    all_tangents,
    brute_force_tangents,
    canonical_partitions,
    oracle_guard,
    rainbow_facets,
    sandwich_tangents,
    tangent_set,
    verify_tangent,
)

from conftest import box, four_prisms, load_fixture, random_family, random_polytope, record_criterion

SEED = 7


def simplex_at(c, size=2):
    d = len(c)
    return [tuple(c)] + [tuple(c[k] + (size if k == j else 0) for k in range(d)) for j in range(d)]


D4_FIXTURES = [
    [simplex_at(c) for c in [(0, 0, 0, 0), (12, 1, 0, 2), (1, 13, 3, 0), (2, 0, 14, 11)]],
    [box((0, 0, 0, 0), (1, 1, 1, 1))] + [simplex_at(c) for c in [(15, 2, 1, 0), (0, 16, 2, 1), (3, 1, 17, 2)]],
    [simplex_at(c, 3) for c in [(0, 0, 0, 0), (10, 1, 2, 3), (-2, 11, 1, 4), (3, -1, 12, 2)]],
]


def _instances():
    rng = random.Random(SEED)
    fams = [random_family(rng, 2) for _ in range(20)]
    fams += [random_family(rng, 3, npts=rng.randint(4, 5)) for _ in range(20)]
    fams += [Family.from_points(pts, 4) for pts in D4_FIXTURES]
    return fams


@pytest.fixture(scope="module")
def count_instances():
    return _instances()


# 1 -----------------------------------------------------------------------------


def test_criterion_01_four_tangents():
    rng = random.Random(SEED)
    ok, cases = True, 0
    left = [(0, 0), (2, -1), (4, 0), (5, 2), (4, 4), (2, 5), (0, 4), (-1, 2)]
    right = [(12, 1), (14, 3), (13, 6), (10, 5)]
    polygons = [(left, right)]
    while len(polygons) < 6:
        a = convex_hull([(rng.randint(0, 6), rng.randint(0, 6)) for _ in range(8)] + [(0, 0), (6, 0), (0, 6)])
        b = convex_hull([(rng.randint(9, 15), rng.randint(-3, 3)) for _ in range(8)] + [(9, -3), (15, -3), (9, 3)])
        polygons.append((a.vertices, b.vertices))
    for a, b in polygons:
        fam = Family.from_points([a, b], 2)
        assert max(len(P.vertices) for P in fam.members) <= 8
        pairs = all_tangents(fam)
        lines = {H.unoriented() for p in pairs for H in p.hyperplanes}
        ok &= len(lines) == 4 and tangent_set(pairs) == set(brute_force_tangents(fam))
        cases += 1
    record_criterion(1, "two disjoint polygons have exactly 4 common tangents (= oracle)", ok, f"{cases} cases")
    assert ok


# 2 -----------------------------------------------------------------------------


def test_criterion_02_two_to_the_d(count_instances):
    start = time.perf_counter()
    bad, checked_oracle = [], 0
    guard = oracle_guard()
    for k, fam in enumerate(count_instances):
        pairs = all_tangents(fam)
        hs = [(H, p.partition) for p in pairs for H in p.hyperplanes]
        distinct = {H.unoriented() for H, _ in hs}
        if len(hs) != 2**fam.d or len(distinct) != 2**fam.d:
            bad.append(k)
        if not all(verify_tangent(H, fam, part).ok for H, part in hs):
            bad.append(k)
        if len(set(fam.all_vertices())) <= guard:
            checked_oracle += 1
            if tangent_set(pairs) != set(brute_force_tangents(fam)):
                bad.append(k)
    dims = Counter(f.d for f in count_instances)
    detail = f"d=2:{dims[2]} d=3:{dims[3]} d=4:{dims[4]}, oracle on {checked_oracle}, {time.perf_counter() - start:.1f}s"
    record_criterion(2, "2^d distinct verified tangents per family", not bad, detail)
    assert not bad


# 3 -----------------------------------------------------------------------------


def test_criterion_03_at_most_two(count_instances):
    worst = 0
    for fam in count_instances:
        counts = Counter(part for _, part in brute_force_tangents(fam))
        worst = max(worst, max(counts.values()))
    ok = worst <= 2
    record_criterion(3, "no partition class holds 3 or more oracle tangents", ok, f"max per class {worst}")
    assert ok


# 4 -----------------------------------------------------------------------------


def test_criterion_04_sphere_checks():
    sq = load_fixture("two_squares.json").family()
    c22 = tangent_complex(sq)
    ok22 = c22.f_vector == (2,) and verify_sphere(c22).verdict

    tetra = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]
    pair = Family.from_points([tetra, [en.add(en.vec(p), (5, 1, 2)) for p in tetra]], 3)
    c23 = tangent_complex(pair)
    rep23 = verify_sphere(c23)
    f0, f1 = c23.f_vector
    degrees = Counter(a for a, _ in c23.covers(0))
    ok23 = (
        f0 == f1
        and rep23.euler == 0
        and all(degrees[a] == 2 for a in range(f0))
        and rep23.connected
    )

    c34 = tangent_complex(load_fixture("simplices_m3_d4.json").family())
    rep34 = verify_sphere(c34)
    ok34 = rep34.euler == 0 and rep34.pseudomanifold and rep34.connected

    ok = ok22 and ok23 and ok34
    detail = f"(2,2) f={c22.f_vector}; (2,3) f={c23.f_vector}; (3,4) f={c34.f_vector} euler {rep34.euler}"
    record_criterion(4, "tangent complex passes the sphere checks", ok, detail)
    assert ok


# 5 -----------------------------------------------------------------------------


def test_criterion_05_four_prisms():
    fam = four_prisms()
    hull = convex_hull(fam.all_vertices(), 4)
    owner = {v: i for i, P in enumerate(fam.members) for v in P.vertices}
    coloring = {j: owner[v] for j, v in enumerate(hull.vertices)}
    rainbow = rainbow_facets(hull, coloring, range(4))
    cert = is_strongly_separated(fam)
    ok = not rainbow and not cert.ok
    detail = f"{len(hull.facets)} hull facets, rainbow {len(rainbow)}, failing {sorted(i + 1 for i in cert.failing or ())}"
    record_criterion(5, "R^4 prisms: no rainbow facet and a failing bipartition", ok, detail)
    assert ok


# 6 -----------------------------------------------------------------------------


def test_criterion_06_visibility_witness():
    rng = random.Random(SEED)
    done, tries, ok = 0, 0, True
    while done < 50:
        tries += 1
        d = rng.choice((2, 3))
        P = random_polytope(rng, d)
        k = rng.randint(2, min(4, len(P.facets)))
        coloring = {j: rng.randrange(k) for j in range(len(P.facets))}
        used = sorted(set(coloring.values()))
        if len(used) < 2:
            continue
        I = frozenset(rng.sample(used, rng.randint(1, len(used) - 1)))
        w = visibility_witness(P, coloring, I)
        if w is None:
            continue
        done += 1
        ok &= visible_facets(P, w) == {j for j, c in coloring.items() if c in I}
    record_criterion(6, "visibility witnesses see exactly the requested colors", ok, f"50 feasible of {tries}")
    assert ok


# 7 -----------------------------------------------------------------------------


def _candidates(table, sub_part):
    """The two sandwich candidates for a subfamily partition, from all_tangents."""
    if sub_part.canonical() == sub_part:
        return table[sub_part]
    return [H.flipped() for H in table[sub_part.swapped()]]


def test_criterion_07_d_plus_one_uniqueness():
    rng = random.Random(SEED)
    start = time.perf_counter()
    bad, tested = [], 0
    families = [random_family(rng, 2, m=3) for _ in range(10)]
    families += [random_family(rng, 3, m=4, npts=4) for _ in range(5)]
    for fam in families:
        m = fam.m
        for a in range(m):
            keep = [i for i in range(m) if i != a]
            index = {old: new for new, old in enumerate(keep)}
            sub = fam.subfamily(keep)
            table = {p.partition: p.hyperplanes for p in all_tangents(sub)}
            for part in canonical_partitions(m):
                if a not in part.A:
                    part = part.swapped()
                sub_part = Partition(
                    frozenset(index[i] for i in part.A if i != a), frozenset(index[i] for i in part.B)
                )
                qualifying = [
                    H for H in _candidates(table, sub_part) if all(H.value(v) > 0 for v in fam.vertices(a))
                ]
                tested += 1
                if len(qualifying) != 1:
                    bad.append((a, str(part), len(qualifying)))
    detail = f"{tested} (family, a, partition) cases, {time.perf_counter() - start:.1f}s"
    record_criterion(7, "exactly one candidate leaves member a strictly positive", not bad, detail)
    assert not bad, bad[:5]


# 8 -----------------------------------------------------------------------------


def test_criterion_08_convergence():
    start = time.perf_counter()
    left, right = BodySpec("disk", (-2, 0), radius=1), BodySpec("disk", (4, 0), radius=2)
    analytic = analytic_circle_tangents((-2, 0), 1, (4, 0), 2)
    ok, worst_angle, worst_offset, notes = True, 0.0, 0.0, []
    for part, kind in ((Partition.from_A({0, 1}, 2), "outer"), (Partition.from_A({0}, 2), "inner")):
        run = convergence_run([left, right], part, (8, 16, 32, 64))
        targets = [l.as_float() for l in analytic if l.kind == kind]
        for H in run.final.hyperplanes:
            n, a = unit_form(H)
            angle, offset = min((angle_between(n, m), abs(a - b)) for m, b in targets)
            worst_angle, worst_offset = max(worst_angle, angle), max(worst_offset, offset)
        distinct = run.limit_angle > 10 * run.final_gap
        ok &= distinct and run.nested
        notes.append(f"{kind}: limit angle {run.limit_angle:.3f} vs gap {run.final_gap:.2e}")
    elapsed = time.perf_counter() - start
    ok &= worst_angle < 1e-2 and worst_offset < 5e-2 and elapsed < 30
    detail = f"angle {worst_angle:.2e} rad, offset {worst_offset:.2e}, {'; '.join(notes)}, {elapsed:.1f}s"
    record_criterion(8, "inscribed disks converge to the analytic tangents", ok, detail)
    assert ok


# 9 -----------------------------------------------------------------------------


def test_criterion_09_ngon():
    rep = ngon_pyramid_demo(5)
    ok = rep.tangent_count >= 5 and not rep.strongly_separated
    detail = f"{rep.tangent_count} planes, failing bipartition {sorted(i + 1 for i in rep.failing_bipartition)}"
    record_criterion(9, "5-gon pyramid between two balls has >= 5 common tangents", ok, detail)
    assert ok


# 10 ----------------------------------------------------------------------------


def _inverse_transpose_apply(M, u):
    Mt = [[M[r][c] for r in range(len(M))] for c in range(len(M))]
    return en.solve_linear(Mt, u).x


def _random_affine(rng, d):
    while True:
        M = [[rng.randint(-3, 3) for _ in range(d)] for _ in range(d)]
        if en.det(M) != 0:
            t = tuple(F(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(d))
            return M, t


def test_criterion_10_equivariance_involution_flip():
    rng = random.Random(SEED)
    eq_ok = inv_ok = flip_ok = True
    for k in range(20):
        fam = random_family(rng, 2 if k < 15 else 3)
        M, t = _random_affine(rng, fam.d)
        image = fam.mapped(lambda v: en.add(tuple(en.dot(row, v) for row in M), t))
        moved = set()
        for H, part in tangent_set(all_tangents(fam)):
            u = _inverse_transpose_apply(M, H.normal)
            moved.add((OrientedHyperplane(u, H.offset + en.dot(u, t)), part))
        eq_ok &= tangent_set(all_tangents(image)) == moved

        P = random_polytope(rng, rng.choice((2, 3)))
        P = translate(P, en.neg(interior_point(P)))
        inv_ok &= sorted(polar_dual(polar_dual(P)).vertices) == sorted(P.vertices)

        part = Partition.from_A(rng.sample(range(fam.m), rng.randint(0, fam.m)), fam.m)
        a = sandwich_tangents(fam, part).hyperplanes
        b = sandwich_tangents(fam, part.swapped()).hyperplanes
        flip_ok &= {H.flipped() for H in a} == set(b)
    ok = eq_ok and inv_ok and flip_ok
    detail = f"affine {eq_ok}, polar {inv_ok}, flip {flip_ok} on 20 instances each"
    record_criterion(10, "affine equivariance, polar involution, orientation flip", ok, detail)
    assert ok
