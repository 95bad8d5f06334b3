"""JSON input/output documents.  Every number travels as a rational string."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import exactnum as en
from .approx import BodySpec
from .polytope import OrientedHyperplane
from .separation import Family
from .tangents import Partition, verify_tangent


class DocumentError(ValueError):
    """Malformed input; ``location`` is a JSON path like ``polytopes[1].vertices[0]``."""

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location


def _scalar(value, where):
    if not isinstance(value, (str, int)) or isinstance(value, bool):
        raise DocumentError(where, f"expected a rational string, got {value!r}")
    try:
        return en.parse_scalar(value)
    except ValueError as exc:
        raise DocumentError(where, str(exc)) from None


def _point(value, d, where):
    if not isinstance(value, list):
        raise DocumentError(where, "expected a coordinate list")
    if d is not None and len(value) != d:
        raise DocumentError(where, f"expected {d} coordinates, got {len(value)}")
    return tuple(_scalar(x, f"{where}[{i}]") for i, x in enumerate(value))


def _members(value, m, where):
    if not isinstance(value, list):
        raise DocumentError(where, "expected a list of member numbers")
    out = []
    for i, x in enumerate(value):
        if not isinstance(x, int) or isinstance(x, bool) or not 1 <= x <= m:
            raise DocumentError(f"{where}[{i}]", f"member number must be in 1..{m}")
        out.append(x - 1)
    return frozenset(out)


@dataclass(frozen=True)
class NamedPolytope:
    name: str
    vertices: tuple


@dataclass(frozen=True)
class FacetColor:
    normal: tuple
    color: int


@dataclass(frozen=True)
class FamilyDocument:
    dimension: int
    polytopes: tuple = ()
    bodies: tuple = ()  # (name, BodySpec)
    partition: Partition | None = None
    facet_colors: tuple = ()

    def family(self) -> Family:
        return Family.from_points([p.vertices for p in self.polytopes], self.dimension)

    @property
    def names(self) -> list:
        return [p.name for p in self.polytopes]

    def to_dict(self) -> dict:
        out: dict = {"dimension": self.dimension}
        out["polytopes"] = [
            {"name": p.name, "vertices": [[en.format_scalar(x) for x in v] for v in p.vertices]}
            for p in self.polytopes
        ]
        if self.bodies:
            out["bodies"] = [_body_dict(name, b) for name, b in self.bodies]
        if self.partition is not None:
            out["partition"] = {
                "A": sorted(i + 1 for i in self.partition.A),
                "B": sorted(i + 1 for i in self.partition.B),
            }
        if self.facet_colors:
            out["facet_colors"] = [
                {"normal": [en.format_scalar(x) for x in fc.normal], "color": fc.color}
                for fc in self.facet_colors
            ]
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _body_dict(name, b: BodySpec) -> dict:
    rec = {"name": name, "kind": b.kind}
    if b.kind == "polytope":
        rec["vertices"] = [[en.format_scalar(x) for x in v] for v in b.vertices]
        return rec
    rec["center"] = [en.format_scalar(x) for x in b.center]
    if b.kind == "ellipsoid":
        rec["axes"] = [en.format_scalar(x) for x in b.axes]
    else:
        rec["radius"] = en.format_scalar(b.radius)
    return rec


def _parse_body(rec, d, where):
    if not isinstance(rec, dict):
        raise DocumentError(where, "expected an object")
    kind = rec.get("kind")
    name = rec.get("name", where)
    try:
        if kind == "polytope":
            verts = tuple(
                _point(v, d, f"{where}.vertices[{i}]") for i, v in enumerate(rec.get("vertices", []))
            )
            return name, BodySpec("polytope", vertices=verts)
        center = _point(rec.get("center"), d, f"{where}.center")
        if kind in ("disk", "ball"):
            return name, BodySpec(kind, center, radius=_scalar(rec.get("radius"), f"{where}.radius"))
        if kind == "ellipsoid":
            return name, BodySpec(kind, center, axes=_point(rec.get("axes"), d, f"{where}.axes"))
    except DocumentError:
        raise
    except ValueError as exc:
        raise DocumentError(where, str(exc)) from None
    raise DocumentError(f"{where}.kind", f"unknown body kind {kind!r}")


def parse_family_document(data) -> FamilyDocument:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"line {exc.lineno}", exc.msg) from None
    if not isinstance(data, dict):
        raise DocumentError("$", "expected a JSON object")
    d = data.get("dimension")
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise DocumentError("dimension", "expected a positive integer")
    polys = []
    names = set()
    for k, rec in enumerate(data.get("polytopes", [])):
        where = f"polytopes[{k}]"
        if not isinstance(rec, dict):
            raise DocumentError(where, "expected an object")
        name = rec.get("name", f"P{k + 1}")
        if name in names:
            raise DocumentError(f"{where}.name", f"duplicate name {name!r}")
        names.add(name)
        verts = rec.get("vertices")
        if not isinstance(verts, list) or not verts:
            raise DocumentError(f"{where}.vertices", "expected a nonempty list")
        polys.append(
            NamedPolytope(name, tuple(_point(v, d, f"{where}.vertices[{i}]") for i, v in enumerate(verts)))
        )
    bodies = tuple(_parse_body(rec, d, f"bodies[{k}]") for k, rec in enumerate(data.get("bodies", [])))
    partition = None
    if "partition" in data:
        rec = data["partition"]
        m = len(polys) or len(bodies)
        if not isinstance(rec, dict):
            raise DocumentError("partition", "expected {A: [...], B: [...]}")
        A = _members(rec.get("A", []), m, "partition.A")
        B = _members(rec.get("B", sorted(set(range(1, m + 1)) - {i + 1 for i in A})), m, "partition.B")
        if A & B or len(A | B) != m:
            raise DocumentError("partition", "A and B must split the members")
        partition = Partition(A, B)
    colors = []
    for k, rec in enumerate(data.get("facet_colors", [])):
        where = f"facet_colors[{k}]"
        if not isinstance(rec, dict) or not isinstance(rec.get("color"), int):
            raise DocumentError(where, "expected {normal: [...], color: int}")
        colors.append(FacetColor(_point(rec.get("normal"), d, f"{where}.normal"), rec["color"]))
    return FamilyDocument(d, tuple(polys), bodies, partition, tuple(colors))


def load_family_document(path) -> FamilyDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_family_document(fh.read())


# -- results -------------------------------------------------------------


def hyperplane_record(H: OrientedHyperplane, partition: Partition | None = None, contacts=None) -> dict:
    rec = {
        "normal": [en.format_scalar(x) for x in H.normal],
        "offset": en.format_scalar(H.offset),
    }
    if partition is not None:
        rec["partition"] = {
            "A": sorted(i + 1 for i in partition.A),
            "B": sorted(i + 1 for i in partition.B),
        }
        rec["orientation"] = "A members in <x,normal> >= offset, B members in <= offset"
    else:
        rec["orientation"] = "family in <x,normal> >= offset"
    if contacts is not None:
        rec["contacts"] = [sorted(c) for c in contacts]
    return rec


def parse_hyperplane(rec, where="hyperplane"):
    d = len(rec.get("normal", []))
    u = _point(rec.get("normal"), d, f"{where}.normal")
    return OrientedHyperplane(u, _scalar(rec.get("offset"), f"{where}.offset"))


@dataclass
class ResultDocument:
    command: dict
    status: str
    certificates: list = field(default_factory=list)
    hyperplanes: list = field(default_factory=list)
    complex: dict | None = None
    sphere: dict | None = None
    details: dict = field(default_factory=dict)
    timing: float | None = None

    def to_dict(self) -> dict:
        out = {"command": self.command, "status": self.status}
        for key in ("certificates", "hyperplanes"):
            if getattr(self, key):
                out[key] = getattr(self, key)
        for key in ("complex", "sphere"):
            if getattr(self, key) is not None:
                out[key] = getattr(self, key)
        if self.details:
            out["details"] = self.details
        if self.timing is not None:
            out["timing_seconds"] = round(self.timing, 4)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data) -> "ResultDocument":
        return cls(
            data["command"],
            data["status"],
            data.get("certificates", []),
            data.get("hyperplanes", []),
            data.get("complex"),
            data.get("sphere"),
            data.get("details", {}),
            data.get("timing_seconds"),
        )


def _reverify(H, family, part, excluded, where):
    if len(part.members) != family.m:
        return
    if excluded is not None:
        # tangent to everyone but member a, which sits strictly on the positive side
        a = excluded - 1
        if a not in part.A:
            raise DocumentError(where, f"excluded member {excluded} is not on the A side")
        keep = [i for i in range(family.m) if i != a]
        index = {old: new for new, old in enumerate(keep)}
        sub = Partition(
            frozenset(index[i] for i in part.A if i != a), frozenset(index[i] for i in part.B)
        )
        report = verify_tangent(H, family.subfamily(keep), sub)
        if report.ok and not all(H.value(v) > 0 for v in family.members[a].vertices):
            raise DocumentError(where, f"member {excluded} is not strictly on the positive side")
    else:
        report = verify_tangent(H, family, part)
    if not report.ok:
        raise DocumentError(where, f"does not re-verify: {report.failures}")


def load_result(data, family: Family | None = None) -> tuple:
    """Parse a result and re-verify every hyperplane that carries a partition.

    Returns (document, list of (hyperplane, partition)).
    """
    if isinstance(data, str):
        data = json.loads(data)
    doc = ResultDocument.from_dict(data)
    out = []
    for k, rec in enumerate(doc.hyperplanes):
        H = parse_hyperplane(rec, f"hyperplanes[{k}]")
        part = None
        if "partition" in rec:
            A = frozenset(i - 1 for i in rec["partition"]["A"])
            B = frozenset(i - 1 for i in rec["partition"]["B"])
            part = Partition(A, B)
            if family is not None:
                _reverify(H, family, part, rec.get("excluded"), f"hyperplanes[{k}]")
        out.append((H, part))
    return doc, out
