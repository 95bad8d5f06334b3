"""Command line: ``polytangent <command> FILE [flags]``.

Exit codes: 0 success, 1 a mathematical hypothesis failed (evidence in the
JSON on stdout), 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import sys
import time

from .approx import convergence_run, ngon_pyramid_demo
from .complexes import rainbow_points_dual, tangent_complex, verify_sphere
from .documents import (
    DocumentError,
    ResultDocument,
    hyperplane_record,
    load_family_document,
    load_result,
)
from .errors import GeometryError, HypothesisError, UnsupportedDimension
from .polytope import OrientedHyperplane, convex_hull
from .render import render_obj, render_svg
from .separation import is_strongly_separated
from .tangents import (
    Partition,
    all_tangents,
    brute_force_tangents,
    sandwich_tangents,
    tangent_set,
    unique_tangent_excluding,
)

EXIT_OK, EXIT_HYPOTHESIS, EXIT_INPUT = 0, 1, 2


class UsageError(ValueError):
    pass


def _members_arg(text: str, m: int) -> frozenset:
    try:
        vals = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad member list {text!r}") from None
    if any(not 1 <= v <= m for v in vals):
        raise UsageError(f"member numbers must lie in 1..{m}")
    return frozenset(v - 1 for v in vals)


def _schedule_arg(text: str) -> tuple:
    try:
        vals = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"bad schedule {text!r}") from None
    if not vals:
        raise UsageError("empty schedule")
    return vals


def _cert_records(cert, m):
    out = []
    for I, H in cert.witnesses.items():
        rec = hyperplane_record(H)
        rec["orientation"] = "I members in <x,normal> < offset, the rest in > offset"
        rec["I"] = sorted(i + 1 for i in I)
        rec["complement"] = sorted(i + 1 for i in range(m) if i not in I)
        out.append(rec)
    return out


def _failing(cert, m):
    I = cert.failing
    return {"I": sorted(i + 1 for i in I), "complement": sorted(i + 1 for i in range(m) if i not in I)}


# -- commands ------------------------------------------------------------------


def cmd_separation(args, doc):
    F = doc.family()
    cert = is_strongly_separated(F)
    res = ResultDocument({"name": "separation", "input": args.file}, "separated" if cert.ok else "not-separated")
    res.certificates = _cert_records(cert, F.m)
    if not cert.ok:
        res.details["failing_bipartition"] = _failing(cert, F.m)
    return res, EXIT_OK if cert.ok else EXIT_HYPOTHESIS


def cmd_tangents(args, doc):
    F = doc.family()
    cmd = {"name": "tangents", "input": args.file}
    if args.exclude is not None:
        cmd["exclude"] = args.exclude
        a = args.exclude - 1
        if not 0 <= a < F.m:
            raise UsageError(f"--exclude must lie in 1..{F.m}")
        if args.partition:
            cmd["partition"] = args.partition
        A = _members_arg(args.partition, F.m) if args.partition else frozenset({a})
        if a not in A:
            raise UsageError("the excluded member must be on the A side of --partition")
        part = Partition.from_A(A, F.m)
        H = unique_tangent_excluding(F, part, a)
        res = ResultDocument(cmd, "ok")
        rec = hyperplane_record(H, part)
        rec["excluded"] = a + 1
        res.hyperplanes = [rec]
        return res, EXIT_OK
    cert = is_strongly_separated(F)
    if not cert.ok:
        res = ResultDocument(cmd, "not-separated", details={"failing_bipartition": _failing(cert, F.m)})
        return res, EXIT_HYPOTHESIS
    if args.partition:
        cmd["partition"] = args.partition
        pairs = [sandwich_tangents(F, Partition.from_A(_members_arg(args.partition, F.m), F.m), cert)]
    else:
        cmd["all"] = True
        pairs = all_tangents(F, cert)
    res = ResultDocument(cmd, "ok")
    for pair in pairs:
        for H, contacts in zip(pair.hyperplanes, pair.contacts):
            res.hyperplanes.append(hyperplane_record(H, pair.partition, contacts))
    if args.oracle:
        cmd["oracle"] = True
        oracle = set(brute_force_tangents(F))
        ours = tangent_set(pairs)
        if not args.partition:
            agree = oracle == ours
        else:
            agree = ours <= oracle
        res.details["oracle_agrees"] = agree
        res.details["oracle_count"] = len({H.unoriented() for H, _ in oracle})
        if not agree:
            res.status = "oracle-mismatch"
            return res, EXIT_HYPOTHESIS
    return res, EXIT_OK


def _complex_payload(C):
    return {
        "d": C.d,
        "m": C.m,
        "k": C.k,
        "f_vector": list(C.f_vector),
        "faces": {str(j): rows for j, rows in C.face_table().items()},
    }


def _sphere_payload(rep):
    return {
        "k": rep.k,
        "f_vector": list(rep.f_vector),
        "euler": rep.euler,
        "pseudomanifold": rep.pseudomanifold,
        "connected": rep.connected,
        "low_dim_exact": rep.low_dim_exact,
        "verdict": "pass" if rep.verdict else "fail",
        "reasons": list(rep.reasons),
        "note": "necessary conditions only (Euler, pseudomanifold, connectivity)",
    }


def cmd_complex(args, doc):
    F = doc.family()
    if not 2 <= F.m <= F.d:
        raise UsageError("complex needs 2 <= m <= d")
    C = tangent_complex(F, relaxed=args.relaxed)
    rep = verify_sphere(C)
    res = ResultDocument({"name": "complex", "input": args.file}, "ok" if rep.verdict else "sphere-check-failed")
    res.complex = _complex_payload(C)
    res.sphere = _sphere_payload(rep)
    res.hyperplanes = [hyperplane_record(f.hyperplane) for f in C.faces.get(0, []) if f.hyperplane is not None]
    return res, EXIT_OK if rep.verdict else EXIT_HYPOTHESIS


def cmd_rainbow(args, doc):
    if len(doc.polytopes) != 1:
        raise UsageError("rainbow expects exactly one polytope")
    Q = convex_hull(doc.polytopes[0].vertices, doc.dimension)
    coloring = {}
    for fc in doc.facet_colors:
        target = OrientedHyperplane(fc.normal, 0)
        hits = [j for j, f in enumerate(Q.facets) if f.hyperplane.normal == target.normal]
        if len(hits) != 1:
            raise UsageError(f"facet color normal {list(map(str, fc.normal))} matches {len(hits)} facets")
        coloring[hits[0]] = fc.color
    if len(coloring) != len(Q.facets):
        raise UsageError(f"{len(Q.facets) - len(coloring)} facets have no color")
    cmd = {"name": "rainbow", "input": args.file}
    try:
        C = rainbow_points_dual(Q, coloring)
    except HypothesisError as exc:
        res = ResultDocument(cmd, "hypothesis-failed", details={"neither_subset": sorted(exc.evidence)})
        return res, EXIT_HYPOTHESIS
    rep = verify_sphere(C)
    res = ResultDocument(cmd, "ok")
    res.complex = _complex_payload(C)
    res.sphere = _sphere_payload(rep)
    return res, EXIT_OK


def cmd_approx(args, doc):
    cmd = {"name": "approx", "input": args.file}
    if args.demo:
        kind, _, n = args.demo.partition(":")
        if kind != "ngon" or not n.isdigit():
            raise UsageError("--demo expects ngon:N")
        cmd["demo"] = args.demo
        rep = ngon_pyramid_demo(int(n))
        res = ResultDocument(cmd, "ok")
        res.hyperplanes = [hyperplane_record(H) for H in rep.hyperplanes]
        for rec in res.hyperplanes:
            rec["orientation"] = "unoriented"
        res.details = {
            "N": rep.N,
            "tangent_count": rep.tangent_count,
            "strongly_separated": rep.strongly_separated,
            "failing_bipartition": sorted(i + 1 for i in rep.failing_bipartition)
            if rep.failing_bipartition is not None
            else None,
        }
        return res, EXIT_OK
    if doc is None or not doc.bodies:
        raise UsageError("approx needs a document with bodies (or --demo)")
    schedule = _schedule_arg(args.schedule)
    m = len(doc.bodies)
    if args.partition:
        part = Partition.from_A(_members_arg(args.partition, m), m)
    elif doc.partition is not None:
        part = doc.partition
    else:
        part = Partition.from_A(range(m), m)
    cmd["schedule"] = list(schedule)
    run = convergence_run([b for _, b in doc.bodies], part, schedule)
    res = ResultDocument(cmd, run.verdict)
    res.details = {
        "partition": str(part),
        "nested": run.nested,
        "threshold_rad": run.threshold,
        "final_angle_gap": run.final_gap,
        "limit_angle": run.limit_angle,
        "levels": [
            {"n": lvl.n, "angle_gap": lvl.angle_gap, "offset_gap": lvl.offset_gap}
            for lvl in run.levels
        ],
    }
    res.hyperplanes = [hyperplane_record(H, part) for H in run.final.hyperplanes]
    return res, EXIT_OK


def cmd_render(args, doc):
    want = 2 if args.svg else 3
    if doc.dimension != want:
        raise UnsupportedDimension(f"{'SVG' if args.svg else 'OBJ'} rendering needs d = {want}, got d = {doc.dimension}")
    F = doc.family()
    if args.result:
        with open(args.result, encoding="utf-8") as fh:
            _, hs = load_result(fh.read(), F)
        hyperplanes = [H for H, _ in hs]
    else:
        hyperplanes = [H for pair in all_tangents(F) for H in pair.hyperplanes]
    if args.svg:
        text = render_svg(F, hyperplanes)
    else:
        text = render_obj(F, hyperplanes)
    with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)
    res = ResultDocument({"name": "render", "input": args.file, "out": args.out}, "ok")
    res.details = {"format": "svg" if args.svg else "obj", "hyperplanes": len(hyperplanes)}
    return res, EXIT_OK


COMMANDS = {
    "separation": cmd_separation,
    "tangents": cmd_tangents,
    "complex": cmd_complex,
    "rainbow": cmd_rainbow,
    "approx": cmd_approx,
    "render": cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="polytangent", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("separation", help="certify strong separation")
    s.add_argument("file")
    s = sub.add_parser("tangents", help="common tangent hyperplanes")
    s.add_argument("file")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--partition", help="members on the A side, e.g. 1,3")
    g.add_argument("--all", action="store_true", help="all 2^d tangents (default)")
    s.add_argument("--oracle", action="store_true", help="cross-check with brute force")
    s.add_argument("--exclude", type=int, help="d+1 members: tangent to all but this one")
    s = sub.add_parser("complex", help="tangent complex and sphere checks")
    s.add_argument("file")
    s.add_argument("--relaxed", action="store_true", help="allow lower-dimensional members")
    s = sub.add_parser("rainbow", help="rainbow faces of a facet-colored polytope")
    s.add_argument("file")
    s = sub.add_parser("approx", help="inscribed-polytope convergence runs")
    s.add_argument("file", nargs="?")
    s.add_argument("--schedule", default="8,16,32,64")
    s.add_argument("--partition")
    s.add_argument("--demo", help="ngon:N pyramid counterexample")
    s = sub.add_parser("render", help="SVG (d=2) or OBJ (d=3) scene")
    s.add_argument("file")
    s.add_argument("--result", help="result JSON with hyperplanes (default: all tangents)")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--svg", action="store_true")
    g.add_argument("--obj", action="store_true")
    s.add_argument("--out", required=True)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    start = time.perf_counter()
    try:
        doc = load_family_document(args.file) if getattr(args, "file", None) else None
        res, code = COMMANDS[args.command](args, doc)
    except HypothesisError as exc:
        evidence = exc.evidence
        if isinstance(evidence, frozenset):
            evidence = sorted(i + 1 for i in evidence) if args.command != "rainbow" else sorted(evidence)
        res = ResultDocument({"name": args.command, "input": args.file}, "hypothesis-failed")
        res.details = {"error": type(exc).__name__, "message": str(exc), "evidence": evidence}
        code = EXIT_HYPOTHESIS
    except (DocumentError, UsageError, GeometryError, ValueError, OSError) as exc:
        print(f"polytangent: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    res.timing = time.perf_counter() - start
    print(res.dumps())
    return code


if __name__ == "__main__":
    sys.exit(main())
