"""Exact convex polytopes: hulls, face lattices, polarity, vertex figures.

Also the bridge between point configurations in R^d and vector
configurations in R^(d+1) (``linearize`` / ``affinize``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Sequence

from . import exactnum as en
from .errors import NotAVertex, NotFullDimensional, OriginNotInterior, WitnessInvalid


@dataclass(frozen=True)
class OrientedHyperplane:
    """The hyperplane <x, normal> = offset, stored up to positive scaling.

    ``__post_init__`` rescales so the first nonzero normal coordinate is +-1,
    hence ``==`` is equality up to a positive factor.
    """

    normal: tuple
    offset: Fraction

    def __post_init__(self):
        u = tuple(Fraction(x) for x in self.normal)
        a = Fraction(self.offset)
        lead = next((x for x in u if x != 0), None)
        if lead is None:
            raise ValueError("hyperplane normal must be nonzero")
        s = abs(lead)
        object.__setattr__(self, "normal", tuple(x / s for x in u))
        object.__setattr__(self, "offset", a / s)

    @property
    def dim(self) -> int:
        return len(self.normal)

    def value(self, x) -> Fraction:
        """<x, u> - alpha: positive on H^+, negative on H^-."""
        return en.dot(x, self.normal) - self.offset

    def side(self, x) -> int:
        return en.sign(self.value(x))

    def flipped(self) -> "OrientedHyperplane":
        return OrientedHyperplane(en.neg(self.normal), -self.offset)

    def unoriented(self) -> "OrientedHyperplane":
        """Representative with first nonzero normal coordinate +1."""
        lead = next(x for x in self.normal if x != 0)
        return self if lead > 0 else self.flipped()

    def same_hyperplane(self, other: "OrientedHyperplane") -> bool:
        return self.unoriented() == other.unoriented()

    @classmethod
    def through(cls, points, outside_of=None) -> "OrientedHyperplane":
        """Hyperplane through d affinely independent points of R^d.

        With ``outside_of`` given, orient so that point lies in H^-.
        """
        points = [tuple(p) for p in points]
        d = len(points[0])
        ns = en.nullspace([list(p) + [Fraction(-1)] for p in points], d + 1)
        if len(ns) != 1 or en.is_zero(ns[0][:d]):
            raise ValueError("points do not span a hyperplane")
        h = cls(ns[0][:d], ns[0][d])
        if outside_of is not None:
            s = h.side(outside_of)
            if s == 0:
                raise ValueError("reference point lies on the hyperplane")
            if s > 0:
                h = h.flipped()
        return h


@dataclass(frozen=True)
class Facet:
    hyperplane: OrientedHyperplane  # outward: polytope in H^<=
    vertices: frozenset


@dataclass(frozen=True)
class Polytope:
    """Irredundant V-description plus facets with incidences.

    ``labels[i]`` is the index of ``vertices[i]`` in whatever point list the
    polytope was built from.
    """

    vertices: tuple
    facets: tuple
    dim: int
    labels: tuple = ()

    @property
    def ambient_dim(self) -> int:
        return len(self.vertices[0])

    def facet_hyperplanes(self):
        return [f.hyperplane for f in self.facets]

    def contains(self, x, strict: bool = False) -> bool:
        if strict:
            return all(f.hyperplane.value(x) < 0 for f in self.facets)
        return all(f.hyperplane.value(x) <= 0 for f in self.facets)

    def face_dim(self, face) -> int:
        return en.affine_rank([self.vertices[i] for i in face])

    @cached_property
    def face_lattice(self) -> dict:
        """Proper nonempty faces by dimension, each a frozenset of vertex indices.

        Faces are exactly the nonempty intersections of facet vertex sets.
        """
        facets = [f.vertices for f in self.facets]
        seen = set(facets)
        frontier = list(facets)
        while frontier:
            nxt = []
            for g in frontier:
                for f in facets:
                    h = g & f
                    if h and h not in seen:
                        seen.add(h)
                        nxt.append(h)
            frontier = nxt
        lattice: dict = {k: [] for k in range(self.dim)}
        for face in seen:
            lattice[self.face_dim(face)].append(face)
        for k in lattice:
            lattice[k].sort(key=lambda s: sorted(s))
        return lattice

    def faces(self, k: int) -> list:
        return self.face_lattice.get(k, [])

    @property
    def f_vector(self) -> tuple:
        return tuple(len(self.faces(k)) for k in range(self.dim))

    def covers(self, k: int) -> list:
        """Pairs (i, j) with faces(k)[i] a facet of faces(k+1)[j]."""
        lo, hi = self.faces(k), self.faces(k + 1)
        return [(i, j) for i, a in enumerate(lo) for j, b in enumerate(hi) if a < b]

    def facets_containing(self, face) -> frozenset:
        return frozenset(j for j, f in enumerate(self.facets) if face <= f.vertices)

    def edges(self) -> list:
        return self.faces(1)


# -- hull -------------------------------------------------------------------


def _initial_simplex(points, d):
    """Indices of d+1 affinely independent points (greedy by input order)."""
    chosen = [0]
    basis: list = []  # reduced rows of the difference space, pivot-keyed
    p0 = points[0]
    for i in range(1, len(points)):
        if len(chosen) == d + 1:
            break
        v = list(en.sub(points[i], p0))
        for piv, row in basis:
            if v[piv] != 0:
                f = v[piv] / row[piv]
                v = [x - f * y for x, y in zip(v, row)]
        piv = next((c for c, x in enumerate(v) if x != 0), None)
        if piv is not None:
            basis.append((piv, v))
            chosen.append(i)
    if len(chosen) < d + 1:
        raise NotFullDimensional(
            f"points span an affine subspace of dimension {len(chosen) - 1} < {d}"
        )
    return chosen


def convex_hull(points: Sequence, d: int | None = None) -> Polytope:
    """Convex hull of a full-dimensional finite point set in R^d.

    Incremental beneath-beyond over a simplicial boundary with exact
    predicates; coplanar simplices are merged into true facets afterwards.
    """
    pts = [en.vec(p) for p in points]
    if not pts:
        raise NotFullDimensional("no points")
    if d is None:
        d = len(pts[0])
    if any(len(p) != d for p in pts):
        raise ValueError("points must all have dimension d")
    # duplicates collapse to their first occurrence
    first: dict = {}
    uniq = []
    for i, p in enumerate(pts):
        if p not in first:
            first[p] = i
            uniq.append(i)
    upts = [pts[i] for i in uniq]
    init = _initial_simplex(upts, d)
    inner = en.centroid([upts[i] for i in init])

    facets: dict = {}  # id -> (vertex tuple, hyperplane)
    ridges: dict = {}  # frozenset ridge -> set of facet ids
    counter = [0]

    def add_facet(verts):
        h = OrientedHyperplane.through([upts[i] for i in verts], outside_of=inner)
        fid = counter[0]
        counter[0] += 1
        facets[fid] = (verts, h)
        for r in combinations(verts, d - 1):
            ridges.setdefault(frozenset(r), set()).add(fid)

    def drop_facet(fid):
        verts, _ = facets.pop(fid)
        for r in combinations(verts, d - 1):
            key = frozenset(r)
            ridges[key].discard(fid)
            if not ridges[key]:
                del ridges[key]

    for omit in range(d + 1):
        add_facet(tuple(init[j] for j in range(d + 1) if j != omit))

    in_init = set(init)
    for i in range(len(upts)):
        if i in in_init:
            continue
        p = upts[i]
        visible = {fid for fid, (_, h) in facets.items() if h.value(p) > 0}
        if not visible:
            continue
        horizon = []
        for fid in visible:
            verts, _ = facets[fid]
            for r in combinations(verts, d - 1):
                other = ridges[frozenset(r)] - {fid}
                if not other <= visible:
                    horizon.append(r)
        for fid in visible:
            drop_facet(fid)
        for r in horizon:
            add_facet(tuple(r) + (i,))

    # merge coplanar simplices
    groups: dict = {}
    for verts, h in facets.values():
        groups.setdefault(h, set()).update(verts)
    hyperplanes = list(groups)
    candidates = sorted(set().union(*groups.values()))
    vertex_ids = []
    for c in candidates:
        normals = [h.normal for h in hyperplanes if h.value(upts[c]) == 0]
        if en.rank(normals) == d:
            vertex_ids.append(c)
    verts = tuple(upts[c] for c in vertex_ids)
    labels = tuple(uniq[c] for c in vertex_ids)
    facet_list = []
    for h in hyperplanes:
        inc = frozenset(j for j, v in enumerate(verts) if h.value(v) == 0)
        facet_list.append(Facet(h, inc))
    facet_list.sort(key=lambda f: sorted(f.vertices))
    return Polytope(verts, tuple(facet_list), d, labels)


def from_facets(vertices, hyperplanes, labels=()) -> Polytope:
    """Assemble a Polytope from known vertices and outward facet hyperplanes."""
    verts = tuple(en.vec(v) for v in vertices)
    facet_list = [
        Facet(h, frozenset(j for j, v in enumerate(verts) if h.value(v) == 0))
        for h in hyperplanes
    ]
    return Polytope(verts, tuple(facet_list), len(verts[0]), tuple(labels))


# -- polarity, interior, vertex figure --------------------------------------


def interior_point(P: Polytope):
    """Vertex average; always strictly interior for a full-dimensional polytope."""
    c = en.centroid(P.vertices)
    assert P.contains(c, strict=True)
    return c


def translate(P: Polytope, t) -> Polytope:
    t = en.vec(t)
    verts = [en.add(v, t) for v in P.vertices]
    hs = [
        OrientedHyperplane(f.hyperplane.normal, f.hyperplane.offset + en.dot(f.hyperplane.normal, t))
        for f in P.facets
    ]
    return Polytope(
        tuple(verts),
        tuple(Facet(h, f.vertices) for h, f in zip(hs, P.facets)),
        P.dim,
        P.labels,
    )


def polar_dual(P: Polytope) -> Polytope:
    """{y : <x, y> <= 1 for x in P}.  Vertex j of the result is facet j of P,
    facet i of the result is vertex i of P."""
    if P.dim != P.ambient_dim:
        raise NotFullDimensional("polar of a lower-dimensional polytope")
    for f in P.facets:
        if f.hyperplane.offset <= 0:
            raise OriginNotInterior("origin must lie strictly inside the polytope")
    verts = tuple(en.scale(1 / f.hyperplane.offset, f.hyperplane.normal) for f in P.facets)
    facets = []
    for i, v in enumerate(P.vertices):
        h = OrientedHyperplane(v, Fraction(1))
        inc = frozenset(j for j, f in enumerate(P.facets) if i in f.vertices)
        facets.append(Facet(h, inc))
    return Polytope(verts, tuple(facets), P.dim, tuple(range(len(verts))))


def _drop_coordinate(x, j):
    return tuple(c for i, c in enumerate(x) if i != j)


def vertex_figure(P: Polytope, v: int, factor=Fraction(1, 2)) -> Polytope:
    """Slice P by a hyperplane separating vertex v from the other vertices.

    The cut sits at ``factor`` of the way from v toward the nearest other
    vertex level along a normal that strictly exposes v.  The result lives
    in R^(d-1) via coordinate dropping on the cutting hyperplane.
    """
    if not 0 <= v < len(P.vertices):
        raise NotAVertex(f"no vertex with index {v}")
    if P.dim != P.ambient_dim:
        raise NotFullDimensional("vertex figure needs a full-dimensional polytope")
    factor = Fraction(factor)
    if not 0 < factor < 1:
        raise ValueError("factor must lie in (0, 1)")
    d = P.dim
    incident = [f.hyperplane.normal for f in P.facets if v in f.vertices]
    u = tuple(sum(col, Fraction(0)) for col in zip(*incident))
    top = en.dot(P.vertices[v], u)
    rest = max(en.dot(w, u) for j, w in enumerate(P.vertices) if j != v)
    level = top - factor * (top - rest)
    pv = P.vertices[v]
    cut_points = []
    for e in P.edges():
        if v not in e:
            continue
        (w,) = e - {v}
        pw = P.vertices[w]
        t = (top - level) / (top - en.dot(pw, u))
        cut_points.append(en.add(pv, en.scale(t, en.sub(pw, pv))))
    j = next(i for i, x in enumerate(u) if x != 0)
    return convex_hull([_drop_coordinate(p, j) for p in cut_points], d - 1)


# -- linearization ------------------------------------------------------------


@dataclass(frozen=True)
class VectorConfiguration:
    vectors: tuple
    labels: tuple = ()


def linearize(points, labels=None) -> VectorConfiguration:
    vs = tuple(en.vec(p) + (Fraction(1),) for p in points)
    return VectorConfiguration(vs, tuple(labels) if labels is not None else tuple(range(len(vs))))


def negate(config: VectorConfiguration, which) -> VectorConfiguration:
    """Negate the vectors at the given positions."""
    which = set(which)
    vs = tuple(en.neg(v) if i in which else v for i, v in enumerate(config.vectors))
    return VectorConfiguration(vs, config.labels)


@dataclass(frozen=True)
class AffineFrame:
    """Chart of the hyperplane <h, x> = 1 in R^(d+1): drop coordinate ``drop``."""

    h: tuple
    drop: int

    def to_chart(self, v):
        s = en.dot(self.h, v)
        if s <= 0:
            raise WitnessInvalid("vector not on the positive side of the witness")
        return _drop_coordinate(en.scale(1 / s, v), self.drop)

    def pull_back(self, H: OrientedHyperplane) -> tuple:
        """Linear functional n on R^(d+1) with <n, x> = <a, chart(x)> - b on <h,x>=1."""
        a = list(H.normal)
        a.insert(self.drop, Fraction(0))
        return tuple(ai - H.offset * hi for ai, hi in zip(a, self.h))

    def push_forward(self, n) -> OrientedHyperplane:
        """Chart hyperplane of the linear hyperplane <n, x> = 0 (sign preserved)."""
        hj = self.h[self.drop]
        nj = n[self.drop]
        a = [ni - nj * hi / hj for i, (ni, hi) in enumerate(zip(n, self.h)) if i != self.drop]
        return OrientedHyperplane(tuple(a), -nj / hj)


def affinize(config: VectorConfiguration, h) -> tuple[list, AffineFrame]:
    """Points v / <h, v> in the chart of H_{h,1}, plus the frame data."""
    h = en.vec(h)
    for v in config.vectors:
        if en.dot(h, v) <= 0:
            raise WitnessInvalid("witness h does not certify acyclicity")
    drop = max(i for i, x in enumerate(h) if x != 0)
    frame = AffineFrame(h, drop)
    return [frame.to_chart(v) for v in config.vectors], frame
