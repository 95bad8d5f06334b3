import itertools
import random
from fractions import Fraction
from pathlib import Path

import pytest

from polytangent.separation import Family, is_strongly_separated

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
GOLDEN = Path(__file__).resolve().parent / "golden"

F = Fraction


def box(lo, hi):
    return [tuple(F(x) for x in p) for p in itertools.product(*zip(lo, hi))]


def load_fixture(name):
    from polytangent.documents import parse_family_document

    return parse_family_document((FIXTURES / name).read_text())


SQUARE_CYCLE = [(1, 1), (-1, 1), (-1, -1), (1, -1)]


def four_prisms():
    members = []
    for p, s in zip(SQUARE_CYCLE, (1, 2, 1, 2)):
        members.append([tuple(F(x) for x in p) + q for q in box((-s, -s), (s, s))])
    return Family.from_points(members, 4)


def two_squares():
    return Family.from_points([box((0, 0), (1, 1)), box((3, 0), (4, 1))], 2)


def random_blob(rng, center, npts, spread=3):
    pts = set()
    while len(pts) < npts:
        pts.add(tuple(F(c) + F(rng.randint(-spread * 4, spread * 4), 4) for c in center))
    return sorted(pts)


def random_family(rng, d, m=None, npts=None, scale=30):
    """Small random polytopes around spread-out centers, redrawn until the
    family is strongly separated and every member is full dimensional."""
    m = d if m is None else m
    while True:
        centers = [tuple(rng.randint(-scale, scale) for _ in range(d)) for _ in range(m)]
        members = [random_blob(rng, c, npts or rng.randint(d + 1, d + 3)) for c in centers]
        try:
            fam = Family.from_points(members, d)
        except Exception:
            continue
        if not fam.is_full_dimensional():
            continue
        if is_strongly_separated(fam).ok:
            return fam


def random_polytope(rng, d, npts=None, spread=5):
    from polytangent.polytope import convex_hull

    while True:
        pts = random_blob(rng, (0,) * d, npts or rng.randint(d + 2, d + 6), spread)
        try:
            return convex_hull(pts, d)
        except Exception:
            continue


@pytest.fixture
def rng():
    return random.Random(20261016)


# -- acceptance summary -------------------------------------------------------

ACCEPTANCE_LINES = {}


def record_criterion(number, title, ok, detail=""):
    ACCEPTANCE_LINES[number] = f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {title}" + (
        f"  ({detail})" if detail else ""
    )
    print(ACCEPTANCE_LINES[number])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])
