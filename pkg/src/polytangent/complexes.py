"""The tangent complex of a family and combinatorial sphere checks.

The complex is kept on the primal side: a face G of conv(union) that holds a
vertex of every color stands for the face of the polar dual indexed by the
facets containing G.  A j-face G gives a complex face of dimension d-1-j,
and complex inclusion is inclusion of those facet index sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import HypothesisFails, NotFullDimensional, VertexColorClash
from .polytope import Polytope, convex_hull
from .separation import Family, classify_color_subsets, first_neither
from .tangents import _require_separated


@dataclass(frozen=True)
class ComplexFace:
    """``polar_vertices`` orders the complex; ``primal_vertices`` is the dual index set."""

    polar_vertices: frozenset
    primal_vertices: frozenset
    hyperplane: object = None


@dataclass(frozen=True)
class TangentComplex:
    d: int
    m: int
    faces: dict  # dim -> list[ComplexFace]

    @property
    def k(self) -> int:
        return self.d - self.m

    @property
    def f_vector(self) -> tuple:
        top = max((j for j, fs in self.faces.items() if fs), default=-1)
        return tuple(len(self.faces.get(j, [])) for j in range(top + 1))

    def covers(self, j: int) -> list:
        """(a, b) with faces[j][a] a facet of faces[j+1][b]."""
        lo, hi = self.faces.get(j, []), self.faces.get(j + 1, [])
        return [
            (a, b)
            for a, s in enumerate(lo)
            for b, t in enumerate(hi)
            if s.polar_vertices < t.polar_vertices
        ]

    def without(self, dim: int, index: int) -> "TangentComplex":
        faces = {j: list(fs) for j, fs in self.faces.items()}
        del faces[dim][index]
        return TangentComplex(self.d, self.m, faces)

    def face_table(self) -> dict:
        return {
            j: [sorted(f.polar_vertices) for f in fs] for j, fs in sorted(self.faces.items())
        }


def _sorted_faces(faces):
    return sorted(faces, key=lambda f: sorted(f.polar_vertices))


def tangent_complex(F: Family, relaxed: bool = False, certificate=None) -> TangentComplex:
    """Rainbow faces of conv(F) as a complex of dimension d - m.

    ``relaxed`` accepts lower-dimensional members as long as the family spans.
    """
    if F.m > F.d:
        raise ValueError("tangent complex needs m <= d")
    if not relaxed and not F.is_full_dimensional():
        raise NotFullDimensional("every member must be full dimensional (use relaxed mode)")
    owner: dict = {}
    for i, P in enumerate(F.members):
        for v in P.vertices:
            if v in owner and owner[v] != i:
                raise VertexColorClash(f"vertex {v} belongs to members {owner[v] + 1} and {i + 1}")
            owner[v] = i
    _require_separated(F, certificate)
    points = F.all_vertices()
    hull = convex_hull(points, F.d)
    color = [owner[v] for v in hull.vertices]
    colors = frozenset(range(F.m))
    faces: dict = {j: [] for j in range(F.d)}
    for j, fs in hull.face_lattice.items():
        for G in fs:
            if {color[v] for v in G} >= colors:
                dim = F.d - 1 - j
                H = None
                if dim == 0:
                    (fi,) = hull.facets_containing(G)
                    H = hull.facets[fi].hyperplane.flipped()
                faces[dim].append(ComplexFace(hull.facets_containing(G), G, H))
    faces = {j: _sorted_faces(fs) for j, fs in faces.items() if fs}
    return TangentComplex(F.d, F.m, faces)


def rainbow_points_dual(Q: Polytope, facet_coloring: Mapping, check: bool = True) -> TangentComplex:
    """Faces of Q lying in a facet of every color.

    With ``check`` every proper color subset must classify as visible or
    covisible; the first one that does neither is reported.
    """
    if check:
        bad = first_neither(classify_color_subsets(Q, facet_coloring))
        if bad is not None:
            raise HypothesisFails(
                f"color subset {sorted(bad)} is neither visible nor covisible", evidence=bad
            )
    colors = frozenset(facet_coloring.values())
    faces: dict = {}
    for j, fs in Q.face_lattice.items():
        for G in fs:
            containing = Q.facets_containing(G)
            if {facet_coloring[i] for i in containing} >= colors:
                faces.setdefault(j, []).append(ComplexFace(G, containing))
    faces = {j: _sorted_faces(fs) for j, fs in faces.items()}
    return TangentComplex(Q.dim, len(colors), faces)


@dataclass(frozen=True)
class SphereReport:
    """Necessary conditions for a combinatorial k-sphere (not a homeomorphism proof)."""

    k: int
    f_vector: tuple
    euler: int
    pseudomanifold: bool
    connected: bool
    low_dim_exact: bool | None
    verdict: bool
    reasons: tuple = ()


def _components(nodes, edges) -> int:
    parent = {n: n for n in nodes}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        parent[find(a)] = find(b)
    return len({find(n) for n in nodes})


def verify_sphere(C: TangentComplex) -> SphereReport:
    k = C.k
    fv = tuple(len(C.faces.get(j, [])) for j in range(k + 1))
    euler = sum((-1) ** j * f for j, f in enumerate(fv))
    reasons = []
    if any(fs for j, fs in C.faces.items() if j > k or j < 0):
        reasons.append("faces above the expected dimension")
    top = C.faces.get(k, [])
    # purity: every face lies in some top face
    for j in range(k):
        for f in C.faces.get(j, []):
            if not any(f.polar_vertices < t.polar_vertices for t in top):
                reasons.append(f"{j}-face {sorted(f.polar_vertices)} not in any {k}-face")
                break
    if k == 0:
        pseudo = len(top) == 2
        connected = True  # vacuous for S^0
    else:
        pseudo = bool(top)
        adjacency = []
        for r in C.faces.get(k - 1, []):
            holders = [b for b, t in enumerate(top) if r.polar_vertices < t.polar_vertices]
            if len(holders) != 2:
                pseudo = False
            elif len(holders) == 2:
                adjacency.append(tuple(holders))
        connected = bool(top) and _components(range(len(top)), adjacency) == 1
    if not pseudo:
        reasons.append("pseudomanifold condition fails")
    if not connected:
        reasons.append("maximal faces not connected")
    low = None
    if k == 0:
        low = fv[0] == 2
    elif k == 1:
        degrees = [
            sum(1 for e in top if v.polar_vertices < e.polar_vertices) for v in C.faces.get(0, [])
        ]
        low = fv[0] == fv[1] and all(x == 2 for x in degrees) and connected
    if low is False:
        reasons.append("low-dimensional structure is not a sphere")
    if euler != 1 + (-1) ** k:
        reasons.append(f"euler characteristic {euler} != {1 + (-1) ** k}")
    verdict = not reasons
    return SphereReport(k, fv, euler, pseudo, connected, low, verdict, tuple(reasons))
