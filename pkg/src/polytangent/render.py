"""SVG (d = 2) and Wavefront OBJ (d = 3) scenes.

The only place floats appear.  Output is deterministic: fixed element order
and every number printed with 9 significant digits.
"""

from __future__ import annotations

import math

from .errors import UnsupportedDimension

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")
BOX_SCALE = 1.25
SVG_SIZE = 800


def num(x) -> str:
    s = format(float(x), ".9g")
    return "0" if s == "-0" else s


def bounding_box(point_sets, scale: float = BOX_SCALE) -> list:
    """Per-axis (lo, hi): the coordinate range grown by ``scale`` about its center."""
    pts = [[float(x) for x in p] for ps in point_sets for p in ps]
    box = []
    for col in zip(*pts):
        lo, hi = min(col), max(col)
        half = (hi - lo) / 2 or 0.5
        mid = (hi + lo) / 2
        box.append((mid - scale * half, mid + scale * half))
    return box


def clip_line(normal, offset, box):
    """Segment of <normal, x> = offset inside a 2D box, or None."""
    (x0, x1), (y0, y1) = box
    a, b = float(normal[0]), float(normal[1])
    c = float(offset)
    pts = []
    if b != 0:
        for x in (x0, x1):
            y = (c - a * x) / b
            if y0 <= y <= y1:
                pts.append((x, y))
    if a != 0:
        for y in (y0, y1):
            x = (c - b * y) / a
            if x0 <= x <= x1:
                pts.append((x, y))
    pts = sorted(set(pts))
    if len(pts) < 2:
        return None
    return pts[0], pts[-1]


def _ordered_polygon_2d(P):
    cx = sum(float(v[0]) for v in P.vertices) / len(P.vertices)
    cy = sum(float(v[1]) for v in P.vertices) / len(P.vertices)
    return sorted(
        ((float(v[0]), float(v[1])) for v in P.vertices),
        key=lambda p: math.atan2(p[1] - cy, p[0] - cx),
    )


def render_svg(family, hyperplanes) -> str:
    if family.d != 2:
        raise UnsupportedDimension(f"SVG rendering needs d = 2, got d = {family.d}")
    box = bounding_box([P.vertices for P in family.members])
    (x0, x1), (y0, y1) = box
    s = SVG_SIZE / max(x1 - x0, y1 - y0)
    width, height = (x1 - x0) * s, (y1 - y0) * s

    def tx(p):
        return num((p[0] - x0) * s), num((y1 - p[1]) * s)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{num(width)}" '
        f'height="{num(height)}" viewBox="0 0 {num(width)} {num(height)}">',
        f'<rect x="0" y="0" width="{num(width)}" height="{num(height)}" fill="white"/>',
    ]
    for i, P in enumerate(family.members):
        color = PALETTE[i % len(PALETTE)]
        if P.dim == 2:
            pts = " ".join(",".join(tx(p)) for p in _ordered_polygon_2d(P))
            out.append(
                f'<polygon id="member{i + 1}" points="{pts}" fill="{color}" '
                f'fill-opacity="0.35" stroke="{color}" stroke-width="2"/>'
            )
        else:
            pts = sorted((float(v[0]), float(v[1])) for v in P.vertices)
            a, b = tx(pts[0]), tx(pts[-1])
            out.append(
                f'<line id="member{i + 1}" x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}" '
                f'stroke="{color}" stroke-width="3"/>'
            )
    for k, H in enumerate(hyperplanes):
        seg = clip_line(H.normal, H.offset, box)
        if seg is None:
            continue
        a, b = tx(seg[0]), tx(seg[1])
        out.append(
            f'<line id="tangent{k + 1}" x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}" '
            f'stroke="black" stroke-width="1"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


# -- OBJ ---------------------------------------------------------------------


def _order_in_plane(points, normal):
    """Sort 3D float points cyclically around their centroid in the plane."""
    n = [float(x) for x in normal]
    c = [sum(p[i] for p in points) / len(points) for i in range(3)]
    # any vector not parallel to n
    ref = (1.0, 0.0, 0.0) if abs(n[0]) < 0.9 * math.sqrt(sum(x * x for x in n)) else (0.0, 1.0, 0.0)
    e1 = _cross(n, ref)
    e2 = _cross(n, e1)
    return sorted(
        points,
        key=lambda p: math.atan2(_dot(_sub(p, c), e2), _dot(_sub(p, c), e1)),
    )


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def clip_plane(normal, offset, box) -> list:
    """Polygon of <normal, x> = offset inside a 3D box (empty if it misses)."""
    n = [float(x) for x in normal]
    c = float(offset)
    corners = [(x, y, z) for x in box[0] for y in box[1] for z in box[2]]
    pts = set()
    for i, p in enumerate(corners):
        for j, q in enumerate(corners):
            if j <= i or sum(a != b for a, b in zip(p, q)) != 1:
                continue
            fp, fq = _dot(n, p) - c, _dot(n, q) - c
            if fp == fq:
                continue
            t = fp / (fp - fq)
            if 0 <= t <= 1:
                pts.add(tuple(round(a + t * (b - a), 12) for a, b in zip(p, q)))
    if len(pts) < 3:
        return []
    return _order_in_plane(sorted(pts), n)


def render_obj(family, hyperplanes) -> str:
    if family.d != 3:
        raise UnsupportedDimension(f"OBJ rendering needs d = 3, got d = {family.d}")
    box = bounding_box([P.vertices for P in family.members])
    lines = ["# polytangent scene"]
    base = 0
    for i, P in enumerate(family.members):
        lines.append(f"o member{i + 1}")
        for v in P.vertices:
            lines.append("v " + " ".join(num(x) for x in v))
        if P.dim == 3:
            for f in P.facets:
                idx = sorted(f.vertices)
                pts = [tuple(float(x) for x in P.vertices[j]) for j in idx]
                order = _order_in_plane(pts, f.hyperplane.normal)
                pos = {p: j for p, j in zip(pts, idx)}
                # outward winding
                ring = [pos[p] for p in order]
                a, b, c = (pts[idx.index(ring[t])] for t in range(3))
                if _dot(_cross(_sub(b, a), _sub(c, a)), [float(x) for x in f.hyperplane.normal]) < 0:
                    ring.reverse()
                lines.append("f " + " ".join(str(base + j + 1) for j in ring))
        base += len(P.vertices)
    for k, H in enumerate(hyperplanes):
        poly = clip_plane(H.normal, H.offset, box)
        if not poly:
            continue
        lines.append(f"o tangent{k + 1}")
        for p in poly:
            lines.append("v " + " ".join(num(x) for x in p))
        lines.append("f " + " ".join(str(base + t + 1) for t in range(len(poly))))
        base += len(poly)
    return "\n".join(lines) + "\n"
