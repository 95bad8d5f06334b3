"""Strong separation certificates, facet visibility, and the simplex S bounded
by the d+1 "all but one" tangents of a d+1 member family."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from . import exactnum as en
from .errors import PointInsidePolytope
from .lpsolve import Feasible, InequalitySystem, Row, feasible, separating_hyperplane
from .polytope import Polytope, convex_hull


@dataclass(frozen=True)
class Family:
    """Ordered polytopes; member i has color i+1.  All share dimension d."""

    members: tuple
    d: int

    def __post_init__(self):
        members = tuple(self.members)
        if not members:
            raise ValueError("a family needs at least one member")
        for P in members:
            if P.ambient_dim != self.d:
                raise ValueError("members must share the ambient dimension")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_points(cls, point_sets, d: int | None = None) -> "Family":
        """Members from raw vertex lists; lower-dimensional members are allowed."""
        point_sets = [[en.vec(p) for p in ps] for ps in point_sets]
        if d is None:
            d = len(point_sets[0][0])
        return cls(tuple(member_polytope(ps, d) for ps in point_sets), d)

    @property
    def m(self) -> int:
        return len(self.members)

    def vertices(self, i: int) -> tuple:
        return self.members[i].vertices

    def union(self, indices) -> list:
        return [v for i in indices for v in self.members[i].vertices]

    def all_vertices(self) -> list:
        return self.union(range(self.m))

    def is_full_dimensional(self) -> bool:
        return all(P.dim == self.d for P in self.members)

    def is_affinely_spanning(self) -> bool:
        return en.affine_rank(self.all_vertices()) == self.d

    def subfamily(self, indices) -> "Family":
        return Family(tuple(self.members[i] for i in indices), self.d)

    def mapped(self, f) -> "Family":
        """Apply a point map to every vertex and rebuild the members."""
        return Family.from_points([[f(v) for v in P.vertices] for P in self.members], self.d)


def _reduce_points(points):
    """Extreme points of a possibly lower-dimensional point set (exact)."""
    pts = list(dict.fromkeys(points))
    keep = []
    for i, p in enumerate(pts):
        others = pts[:i] + pts[i + 1:]
        if not others or separating_hyperplane([p], others, strict=True) is not None:
            keep.append(p)
    return keep


def member_polytope(points, d: int) -> Polytope:
    """Polytope for a family member; handles members of dimension < d.

    Lower-dimensional members keep their extreme points as vertices and no
    facets; only their vertex sets are used downstream.
    """
    points = [en.vec(p) for p in points]
    k = en.affine_rank(points)
    if k == d:
        return convex_hull(points, d)
    verts = _reduce_points(points)
    return Polytope(tuple(verts), (), k, tuple(points.index(v) for v in verts))


# -- strong separation ---------------------------------------------------------


@dataclass(frozen=True)
class SeparationCertificate:
    """Witnesses keyed by the side containing member 0 (0-based indices).

    For a key I the stored hyperplane has members of I in H^- and the rest
    in H^+.
    """

    witnesses: Mapping
    failing: frozenset | None = None

    @property
    def ok(self) -> bool:
        return self.failing is None

    def __bool__(self):
        return self.ok


def bipartitions(m: int):
    """Nontrivial bipartitions I | [m]-I with 0 in I, I != [m], in a fixed order."""
    rest = list(range(1, m))
    for size in range(0, m - 1):
        for extra in combinations(rest, size):
            yield frozenset((0,) + extra)


def is_strongly_separated(F: Family) -> SeparationCertificate:
    witnesses = {}
    for I in bipartitions(F.m):
        J = [j for j in range(F.m) if j not in I]
        h = separating_hyperplane(F.union(sorted(I)), F.union(J), strict=True)
        if h is None:
            return SeparationCertificate(witnesses, failing=I)
        witnesses[I] = h
    return SeparationCertificate(witnesses)


# -- visibility -------------------------------------------------------------------


def visible_facets(P: Polytope, p) -> frozenset:
    """Facets whose supporting hyperplane has p strictly beyond it."""
    p = en.vec(p)
    out = frozenset(i for i, f in enumerate(P.facets) if f.hyperplane.value(p) > 0)
    if not out:
        raise PointInsidePolytope("point lies in the polytope")
    return out


VISIBLE = "visible"
COVISIBLE = "covisible"
NEITHER = "neither"


def visibility_witness(P: Polytope, coloring: Mapping, I, mode: str = VISIBLE):
    """A point seeing exactly the facets colored in I (or exactly the others).

    ``coloring`` maps facet index to color.  Returns None when no point exists.
    """
    I = frozenset(I)
    used = set(coloring.values())
    if not I or not I < used:
        raise ValueError("I must be a nonempty proper subset of the used colors")
    want = I if mode == VISIBLE else frozenset(used - I)
    rows = []
    for j, f in enumerate(P.facets):
        h = f.hyperplane
        rows.append(Row(h.normal, h.offset, ">" if coloring[j] in want else "<"))
    res = feasible(InequalitySystem(tuple(rows), P.ambient_dim))
    return res.witness if isinstance(res, Feasible) else None


@dataclass(frozen=True)
class Classification:
    kind: str
    witness: tuple | None = None


def color_subsets(colors):
    colors = sorted(colors)
    for size in range(1, len(colors)):
        for I in combinations(colors, size):
            yield frozenset(I)


def classify_color_subsets(P: Polytope, coloring: Mapping) -> dict:
    """Visible / Covisible / Neither for every nonempty proper color subset."""
    report = {}
    for I in color_subsets(set(coloring.values())):
        w = visibility_witness(P, coloring, I, VISIBLE)
        if w is not None:
            report[I] = Classification(VISIBLE, w)
            continue
        w = visibility_witness(P, coloring, I, COVISIBLE)
        report[I] = Classification(COVISIBLE, w) if w is not None else Classification(NEITHER)
    return report


def first_neither(report: Mapping):
    for I, c in report.items():
        if c.kind == NEITHER:
            return I
    return None


# -- the simplex S ---------------------------------------------------------------


@dataclass(frozen=True)
class SimplicialSimplex:
    hyperplanes: tuple  # H_i: members j != i in H^<=, member i in H^+
    vertices: tuple  # vertices[i] is the vertex of S off H_i


def simplicial_simplex(F: Family):
    """The d+1 tangents H_i and the simplex S = intersection of the H_i^>= .

    Returns None when the H_i do not bound a full-dimensional simplex on
    their nonnegative sides.
    """
    from .tangents import Partition, unique_tangent_excluding

    if F.m != F.d + 1:
        raise ValueError("simplicial_simplex needs exactly d+1 members")
    hs = []
    for i in range(F.m):
        part = Partition(frozenset({i}), frozenset(range(F.m)) - {i})
        hs.append(unique_tangent_excluding(F, part, i))
    verts = []
    for i in range(F.m):
        others = [hs[j] for j in range(F.m) if j != i]
        sol = en.solve_linear([h.normal for h in others], [h.offset for h in others])
        if not isinstance(sol, en.UniqueSolution):
            return None
        if hs[i].value(sol.x) <= 0:
            return None
        verts.append(sol.x)
    return SimplicialSimplex(tuple(hs), tuple(verts))
