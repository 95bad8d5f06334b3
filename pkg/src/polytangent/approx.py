"""Curved bodies through inscribed polytopes.

Vertices of inscribed polygons are rational points exactly on the circle
(tan-half-angle parametrisation), so "inscribed" is exact and doubling the
vertex count keeps every old vertex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import exactnum as en
from .errors import CirclesNotDisjoint, NotStronglySeparated, UnsupportedBody
from .polytope import convex_hull
from .separation import Family, is_strongly_separated
from .tangents import Partition, TangentPair, brute_force_tangents, sandwich_tangents

BODY_KINDS = ("disk", "ball", "ellipsoid", "polytope")
_T_DENOMINATOR = 10**4
_LATITUDES = (Fraction(-1, 3), Fraction(-1, 6), Fraction(0), Fraction(1, 6), Fraction(1, 3))


@dataclass(frozen=True)
class BodySpec:
    kind: str
    center: tuple = ()
    radius: Fraction | None = None
    axes: tuple = ()
    vertices: tuple = ()

    def __post_init__(self):
        if self.kind not in BODY_KINDS:
            raise UnsupportedBody(f"unknown body kind {self.kind!r}")
        object.__setattr__(self, "center", en.vec(self.center))
        object.__setattr__(self, "axes", en.vec(self.axes))
        object.__setattr__(self, "vertices", tuple(en.vec(v) for v in self.vertices))
        if self.radius is not None:
            object.__setattr__(self, "radius", en.parse_scalar(self.radius))
        if self.kind in ("disk", "ball"):
            if self.radius is None or self.radius <= 0:
                raise ValueError("radius must be positive")
        if self.kind == "ellipsoid":
            if len(self.axes) != len(self.center) or any(a <= 0 for a in self.axes):
                raise ValueError("ellipsoid axes must be positive, one per coordinate")
        if self.kind == "polytope" and not self.vertices:
            raise ValueError("polytope body needs vertices")

    @property
    def dim(self) -> int:
        return len(self.vertices[0]) if self.kind == "polytope" else len(self.center)

    def semi_axes(self) -> tuple:
        if self.kind == "ellipsoid":
            return self.axes
        return (self.radius,) * self.dim

    def contains(self, x) -> bool:
        """Exact membership test (the defining inequality)."""
        if self.kind == "polytope":
            return convex_hull(self.vertices).contains(x)
        q = sum(((xi - ci) / ai) ** 2 for xi, ci, ai in zip(x, self.center, self.semi_axes()))
        return q <= 1

    def on_boundary(self, x) -> bool:
        if self.kind == "polytope":
            raise UnsupportedBody("boundary test only for quadric bodies")
        q = sum(((xi - ci) / ai) ** 2 for xi, ci, ai in zip(x, self.center, self.semi_axes()))
        return q == 1


def circle_point(turns: Fraction, phase=Fraction(0)) -> tuple:
    """Rational point of the unit circle near angle 2*pi*turns + phase."""
    theta = 2 * math.pi * float(turns) + float(phase)
    theta = math.remainder(theta, 2 * math.pi)
    if abs(abs(theta) - math.pi) < 1e-12:
        return (Fraction(-1), Fraction(0))
    t = Fraction(math.tan(theta / 2)).limit_denominator(_T_DENOMINATOR)
    s = 1 + t * t
    return ((1 - t * t) / s, 2 * t / s)


def inscribe_polytope(body: BodySpec, n: int, phase=Fraction(0)):
    """Polytope with all vertices exactly on the body's boundary.

    Disks/ellipses: n vertices near angles 2*pi*k/n + phase.  Balls and
    ellipsoids in R^3: n points on each of five fixed latitudes plus poles.
    """
    d = body.dim
    if n < d + 1:
        raise ValueError(f"need n >= d + 1 = {d + 1}")
    if body.kind == "polytope":
        return convex_hull(body.vertices, d)
    ax = body.semi_axes()
    ring = [circle_point(Fraction(k, n), phase) for k in range(n)]
    if d == 2:
        unit = ring
    elif d == 3:
        unit = [(Fraction(0), Fraction(0), Fraction(1)), (Fraction(0), Fraction(0), Fraction(-1))]
        for lat in _LATITUDES:
            cz, sz = circle_point(lat / 2)  # cos/sin of latitude
            unit += [(cz * x, cz * y, sz) for x, y in ring]
    else:
        raise UnsupportedBody(f"quadric bodies supported in R^2 and R^3, not R^{d}")
    pts = [tuple(c + a * u for c, a, u in zip(body.center, ax, p)) for p in unit]
    return convex_hull(pts, d)


# -- convergence ------------------------------------------------------------


def unit_form(H) -> tuple:
    """(unit normal, offset) of an oriented hyperplane, as floats."""
    u = [float(x) for x in H.normal]
    norm = math.sqrt(sum(x * x for x in u))
    return tuple(x / norm for x in u), float(H.offset) / norm


def angle_between(n1, n2) -> float:
    """Angle between unit vectors; chord form stays accurate near zero."""
    chord = math.sqrt(sum((a - b) ** 2 for a, b in zip(n1, n2)))
    return 2 * math.asin(min(1.0, chord / 2))


def hyperplane_distance(H1, H2) -> tuple:
    """(angle between unit normals, |offset difference|), both oriented."""
    (n1, a1), (n2, a2) = unit_form(H1), unit_form(H2)
    return angle_between(n1, n2), abs(a1 - a2)


def match_pairs(prev, cur) -> tuple:
    """Order ``cur`` to match ``prev`` by nearest angle, ties by offset."""
    straight = [hyperplane_distance(p, c) for p, c in zip(prev, cur)]
    crossed = [hyperplane_distance(p, c) for p, c in zip(prev, reversed(cur))]
    key = lambda ds: (max(a for a, _ in ds), max(o for _, o in ds))
    if key(crossed) < key(straight):
        return tuple(reversed(cur)), crossed
    return tuple(cur), straight


@dataclass
class Level:
    n: int
    family: Family
    pair: TangentPair
    hyperplanes: tuple  # matched to the previous level
    angle_gap: float | None = None
    offset_gap: float | None = None


@dataclass
class RefinementRun:
    schedule: tuple
    partition: Partition
    levels: list
    nested: bool
    verdict: str
    threshold: float
    limit_angle: float  # angle between the two final tangents

    @property
    def final(self) -> Level:
        return self.levels[-1]

    @property
    def final_gap(self) -> float:
        return self.levels[-1].angle_gap or 0.0


def _vertex_set(P):
    return set(P.vertices)


def convergence_run(
    bodies, part: Partition, schedule, phase=Fraction(0), threshold: float = 1e-2
) -> RefinementRun:
    """Sandwich tangents of inscribed families along a refinement schedule.

    Each level is re-certified as strongly separated.  The volume-bisecting
    device of the limit argument is not reproduced; distinctness of the two
    limits is observed through ``limit_angle`` instead.
    """
    schedule = tuple(int(n) for n in schedule)
    if not schedule:
        raise ValueError("empty schedule")
    if any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise ValueError("schedule must be strictly increasing")
    bodies = list(bodies)
    d = bodies[0].dim
    if len(bodies) != d:
        raise ValueError(f"need d = {d} bodies, got {len(bodies)}")
    levels: list = []
    nested = True
    prev_members = None
    for n in schedule:
        members = [inscribe_polytope(b, n, phase) for b in bodies]
        if prev_members is not None:
            nested &= all(_vertex_set(p) <= _vertex_set(q) for p, q in zip(prev_members, members))
        F = Family(tuple(members), d)
        cert = is_strongly_separated(F)
        if not cert.ok:
            raise NotStronglySeparated(f"inscribed family at n={n} not strongly separated", cert.failing)
        pair = sandwich_tangents(F, part, cert)
        if levels:
            hs, dists = match_pairs(levels[-1].hyperplanes, pair.hyperplanes)
            lvl = Level(n, F, pair, hs, max(a for a, _ in dists), max(o for _, o in dists))
        else:
            lvl = Level(n, F, pair, pair.hyperplanes)
        levels.append(lvl)
        prev_members = members
    gaps = [l.angle_gap for l in levels[1:]]
    converging = not gaps or (gaps[-1] < threshold and gaps[-1] <= max(gaps))
    h1, h2 = levels[-1].hyperplanes
    limit_angle = hyperplane_distance(h1, h2)[0]
    return RefinementRun(
        schedule,
        part,
        levels,
        nested,
        "converging" if converging else "not converging",
        threshold,
        limit_angle,
    )


# -- analytic circle tangents ---------------------------------------------


@dataclass(frozen=True)
class AnalyticLine:
    """<normal, x> = offset with unit normal; circle 1 on the nonnegative side."""

    kind: str  # "outer" or "inner"
    normal: tuple
    offset: object
    exact: bool

    def as_float(self) -> tuple:
        return tuple(float(x) for x in self.normal), float(self.offset)


PRECISION_DIGITS = 50


def _rational_sqrt(q: Fraction):
    if q < 0:
        return None
    a, b = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def _sqrt(q: Fraction):
    r = _rational_sqrt(q)
    if r is not None:
        return r, True
    with mpmath.workdps(PRECISION_DIGITS):
        return mpmath.sqrt(mpmath.mpf(q.numerator) / q.denominator), False


def homothety_centers(c1, r1, c2, r2) -> tuple:
    """(external center or None for equal radii, internal center)."""
    c1, c2 = en.vec(c1), en.vec(c2)
    r1, r2 = Fraction(r1), Fraction(r2)
    internal = en.scale(1 / (r1 + r2), en.add(en.scale(r2, c1), en.scale(r1, c2)))
    external = None
    if r1 != r2:
        external = en.scale(1 / (r2 - r1), en.sub(en.scale(r2, c1), en.scale(r1, c2)))
    return external, internal


def _lines_through(X, c, r, kind):
    w = en.sub(c, X)
    W = en.dot(w, w)
    s, exact = _sqrt(W - r * r)
    perp = (-w[1], w[0])
    out = []
    for sgn in (1, -1):
        with mpmath.workdps(PRECISION_DIGITS):
            n = tuple((r * wi + sgn * s * pi) / W for wi, pi in zip(w, perp))
            offset = n[0] * X[0] + n[1] * X[1]
        out.append(AnalyticLine(kind, n, offset, exact))
    return out


def analytic_circle_tangents(c1, r1, c2, r2) -> list:
    """The four common tangents of two disjoint circles: 2 outer, 2 inner.

    Lines are exact Fractions when the square roots involved are rational,
    otherwise mpmath values at ``PRECISION_DIGITS`` significant digits.
    """
    c1, c2 = en.vec(c1), en.vec(c2)
    r1, r2 = Fraction(r1), Fraction(r2)
    D2 = en.dot(en.sub(c2, c1), en.sub(c2, c1))
    if D2 <= (r1 + r2) ** 2:
        raise CirclesNotDisjoint("circles intersect or touch")
    external, internal = homothety_centers(c1, r1, c2, r2)
    lines = []
    if external is not None:
        lines += _lines_through(external, c1, r1, "outer")
    else:
        w = en.sub(c2, c1)
        D, exact = _sqrt(D2)
        for sgn in (1, -1):
            with mpmath.workdps(PRECISION_DIGITS):
                n = (sgn * -w[1] / D, sgn * w[0] / D)
                offset = n[0] * c1[0] + n[1] * c1[1] - r1
            lines.append(AnalyticLine("outer", n, offset, exact))
    lines += _lines_through(internal, c1, r1, "inner")
    return lines


# -- the N-gon pyramid example ------------------------------------------------------


@dataclass
class NgonDemoReport:
    N: int
    tangent_count: int
    hyperplanes: list
    strongly_separated: bool
    failing_bipartition: frozenset | None
    family: Family


def ngon_pyramid_family(N: int) -> Family:
    """Pyramid over a rational N-gon on the unit circle with apex (0,0,1), and
    inscribed stand-ins for unit balls at (0,0,+-10): bipyramids over the same
    N-gon lifted to the ball's equator."""
    if N < 3:
        raise ValueError("N >= 3")
    Q = [circle_point(Fraction(k, N)) for k in range(N)]
    zero, one = Fraction(0), Fraction(1)
    pyramid = [(x, y, zero) for x, y in Q] + [(zero, zero, one)]
    balls = []
    for z in (10, -10):
        z = Fraction(z)
        balls.append([(x, y, z) for x, y in Q] + [(zero, zero, z + 1), (zero, zero, z - 1)])
    return Family.from_points([pyramid] + balls, 3)


def ngon_pyramid_demo(N: int, guard: int | None = None) -> NgonDemoReport:
    F = ngon_pyramid_family(N)
    found = brute_force_tangents(F, guard=guard)
    distinct = sorted({H.unoriented() for H, _ in found}, key=lambda H: (H.normal, H.offset))
    cert = is_strongly_separated(F)
    return NgonDemoReport(N, len(distinct), distinct, cert.ok, cert.failing, F)
