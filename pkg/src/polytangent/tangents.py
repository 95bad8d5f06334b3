"""Common tangent hyperplanes of strongly separated polytope families.

For d members in R^d and a partition A | B of the members there are exactly
two hyperplanes touching every member with A on the nonnegative side and B
on the nonpositive side.  ``sandwich_tangents`` constructs them from the two
rainbow facets of a projectively transformed hull; ``brute_force_tangents``
finds the same hyperplanes by exhaustive search and is kept independent of
that path.
"""

from __future__ import annotations

import os
import warnings
from dataclasses import dataclass
from itertools import combinations, product
from typing import Mapping

from . import exactnum as en
from .errors import (
    BothQualify,
    NeitherQualifies,
    NotAffinelySpanning,
    NotStronglySeparated,
    RainbowCountUnexpected,
    TooLarge,
)
from .lpsolve import Feasible, InequalitySystem, Row, feasible
from .polytope import OrientedHyperplane, Polytope, affinize, convex_hull, linearize, negate
from .separation import Family, SeparationCertificate, is_strongly_separated

DEFAULT_ORACLE_GUARD = 40


@dataclass(frozen=True)
class Partition:
    """Members in ``A`` go to H^>=, members in ``B`` to H^<= (0-based)."""

    A: frozenset
    B: frozenset

    def __post_init__(self):
        object.__setattr__(self, "A", frozenset(self.A))
        object.__setattr__(self, "B", frozenset(self.B))
        if self.A & self.B:
            raise ValueError("partition sides overlap")

    @property
    def members(self) -> frozenset:
        return self.A | self.B

    def swapped(self) -> "Partition":
        return Partition(self.B, self.A)

    def canonical(self) -> "Partition":
        """The orientation with the smallest member on the A side."""
        return self if min(self.members) in self.A else self.swapped()

    @classmethod
    def from_A(cls, A, m: int) -> "Partition":
        A = frozenset(A)
        return cls(A, frozenset(range(m)) - A)

    def __str__(self):
        fmt = lambda s: "{" + ",".join(str(i + 1) for i in sorted(s)) + "}"
        return f"{fmt(self.A)}|{fmt(self.B)}"


def canonical_partitions(m: int):
    """The 2^(m-1) partitions with member 0 on the A side."""
    for bits in product((True, False), repeat=m - 1):
        A = frozenset([0] + [i + 1 for i, b in enumerate(bits) if b])
        yield Partition.from_A(A, m)


@dataclass(frozen=True)
class TangentPair:
    partition: Partition
    hyperplanes: tuple
    contacts: tuple  # contacts[k][i]: vertex indices of member i on hyperplanes[k]


@dataclass(frozen=True)
class TangencyReport:
    ok: bool
    failures: tuple = ()  # (member, vertex index or None, reason)


def contact_face(H: OrientedHyperplane, P: Polytope) -> frozenset:
    return frozenset(j for j, v in enumerate(P.vertices) if H.value(v) == 0)


def verify_tangent(H: OrientedHyperplane, F: Family, part: Partition) -> TangencyReport:
    failures = []
    for i, P in enumerate(F.members):
        vals = [H.value(v) for v in P.vertices]
        if not any(x == 0 for x in vals):
            failures.append((i, None, "does not touch"))
        if i in part.A:
            bad = [j for j, x in enumerate(vals) if x < 0]
            failures += [(i, j, "below hyperplane, expected H^>=") for j in bad]
        elif i in part.B:
            bad = [j for j, x in enumerate(vals) if x > 0]
            failures += [(i, j, "above hyperplane, expected H^<=") for j in bad]
    return TangencyReport(not failures, tuple(failures))


def rainbow_facets(hull: Polytope, coloring: Mapping, colors=None) -> frozenset:
    """Facets containing at least one vertex of every color."""
    colors = frozenset(coloring.values()) if colors is None else frozenset(colors)
    out = []
    for k, f in enumerate(hull.facets):
        if {coloring[v] for v in f.vertices} >= colors:
            out.append(k)
    return frozenset(out)


def _require_separated(F: Family, certificate):
    if certificate is None:
        certificate = is_strongly_separated(F)
    if not certificate.ok:
        raise NotStronglySeparated(
            f"bipartition {sorted(i + 1 for i in certificate.failing)} cannot be separated",
            evidence=certificate.failing,
        )
    return certificate


def sandwich_tangents(
    F: Family, part: Partition, certificate: SeparationCertificate | None = None
) -> TangentPair:
    """The two tangents for ``part`` in a d-member family in R^d."""
    if F.m != F.d:
        raise ValueError(f"sandwich_tangents needs m = d, got m={F.m}, d={F.d}")
    if part.members != frozenset(range(F.m)):
        raise ValueError("partition must cover every member exactly once")
    if not F.is_affinely_spanning():
        raise NotAffinelySpanning("family does not affinely span R^d")
    _require_separated(F, certificate)
    d = F.d
    points, owner = [], []
    for i, P in enumerate(F.members):
        points += P.vertices
        owner += [i] * len(P.vertices)
    config = linearize(points, owner)
    config = negate(config, [k for k, i in enumerate(owner) if i in part.B])
    rows = tuple(Row(v, 0, ">") for v in config.vectors)
    res = feasible(InequalitySystem(rows, d + 1))
    if not isinstance(res, Feasible):
        raise NotStronglySeparated("negated configuration is not acyclic")
    chart_points, frame = affinize(config, res.witness)
    hull = convex_hull(chart_points, d)
    coloring = {j: owner[src] for j, src in enumerate(hull.labels)}
    rainbow = sorted(rainbow_facets(hull, coloring, range(F.m)))
    if len(rainbow) != 2:
        raise RainbowCountUnexpected(f"expected 2 rainbow facets, found {len(rainbow)}")
    hyperplanes, contacts = [], []
    for k in rainbow:
        n = frame.pull_back(hull.facets[k].hyperplane)
        H = OrientedHyperplane(en.neg(n[:d]), n[d])
        report = verify_tangent(H, F, part)
        if not report.ok:
            raise RainbowCountUnexpected(f"constructed hyperplane fails verification: {report.failures}")
        hyperplanes.append(H)
        contacts.append(tuple(contact_face(H, P) for P in F.members))
    order = sorted(range(2), key=lambda k: _sort_key(hyperplanes[k]))
    return TangentPair(part, tuple(hyperplanes[k] for k in order), tuple(contacts[k] for k in order))


def _sort_key(H: OrientedHyperplane):
    return (H.normal, H.offset)


def all_tangents(F: Family, certificate: SeparationCertificate | None = None) -> list:
    """Both tangents for every canonical partition, 2^d hyperplanes in total."""
    certificate = _require_separated(F, certificate)
    pairs = [sandwich_tangents(F, part, certificate) for part in canonical_partitions(F.m)]
    keys = [H.unoriented() for pair in pairs for H in pair.hyperplanes]
    if len(set(keys)) != len(keys):
        msg = f"{len(keys) - len(set(keys))} coincident tangent hyperplanes"
        if F.is_full_dimensional():
            raise AssertionError(msg + " in a full-dimensional family")
        warnings.warn(msg, stacklevel=2)
    return pairs


def tangent_set(pairs) -> set:
    """{(hyperplane, partition)} with A on the nonnegative side, canonical A."""
    out = set()
    for pair in pairs:
        for H in pair.hyperplanes:
            p = pair.partition
            if min(p.members) not in p.A:
                H, p = H.flipped(), p.swapped()
            out.add((H, p))
    return out


def oracle_guard() -> int:
    return int(os.environ.get("TANGENT_ORACLE_GUARD", DEFAULT_ORACLE_GUARD))


def brute_force_tangents(F: Family, guard: int | None = None) -> list:
    """Every vertex-spanned common tangent with its induced partitions.

    Tries all d-subsets of the union's vertices.  Returns sorted
    (hyperplane, partition) pairs, canonical as in ``tangent_set``.  A member
    lying inside the hyperplane fits either side and yields both partitions.
    """
    guard = oracle_guard() if guard is None else guard
    verts = list(dict.fromkeys(F.all_vertices()))
    if len(verts) > guard:
        raise TooLarge(f"{len(verts)} vertices exceed the oracle guard of {guard}")
    d = F.d
    seen = set()
    found = set()
    for subset in combinations(verts, d):
        try:
            H = OrientedHyperplane.through(subset).unoriented()
        except ValueError:  # affinely dependent subset
            continue
        if H in seen:
            continue
        seen.add(H)
        sides = []
        for P in F.members:
            vals = [H.value(v) for v in P.vertices]
            if not any(x == 0 for x in vals):
                break
            opts = []
            if all(x >= 0 for x in vals):
                opts.append(1)
            if all(x <= 0 for x in vals):
                opts.append(-1)
            if not opts:
                break
            sides.append(opts)
        else:
            for choice in product(*sides):
                s0 = choice[0]
                A = frozenset(i for i, s in enumerate(choice) if s == s0)
                part = Partition(A, frozenset(range(F.m)) - A)
                found.add((H if s0 > 0 else H.flipped(), part))
    return sorted(found, key=lambda t: (sorted(t[1].A), _sort_key(t[0])))


def unique_tangent_excluding(F: Family, part: Partition, a: int) -> OrientedHyperplane:
    """The hyperplane tangent to every member but ``a`` with sides from ``part``
    and member ``a`` strictly on the positive side (d+1 members in R^d)."""
    if F.m != F.d + 1:
        raise ValueError(f"needs m = d + 1 members, got m={F.m}, d={F.d}")
    if a not in part.A:
        raise ValueError("the excluded member must lie on the A side")
    keep = [i for i in range(F.m) if i != a]
    index = {old: new for new, old in enumerate(keep)}
    sub = F.subfamily(keep)
    subpart = Partition(
        frozenset(index[i] for i in part.A if i != a), frozenset(index[i] for i in part.B)
    )
    pair = sandwich_tangents(sub, subpart)
    qualifying = [
        H for H in pair.hyperplanes if all(H.value(v) > 0 for v in F.members[a].vertices)
    ]
    if not qualifying:
        raise NeitherQualifies(f"no candidate has member {a + 1} strictly on the positive side")
    if len(qualifying) > 1:
        raise BothQualify(f"both candidates have member {a + 1} strictly on the positive side")
    return qualifying[0]
