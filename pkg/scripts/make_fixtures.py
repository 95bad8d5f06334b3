"""Regenerate the JSON fixtures in fixtures/.

    python3 scripts/make_fixtures.py [outdir]
"""

import itertools
import json
import sys
from pathlib import Path


def pts(rows):
    return [[str(x) for x in r] for r in rows]


def doc(d, members, **extra):
    out = {"dimension": d, "polytopes": [{"name": n, "vertices": pts(v)} for n, v in members]}
    out.update(extra)
    return out


def box(lo, hi):
    return list(itertools.product(*zip(lo, hi)))


SQUARE = [(1, 1), (-1, 1), (-1, -1), (1, -1)]  # cyclic: diagonals p1p3 and p2p4

FIXTURES = {
    "two_squares.json": doc(
        2,
        [("left", box((0, 0), (1, 1))), ("right", box((3, 1), (4, 2)))],
    ),
    "three_bodies_d3.json": doc(
        3,
        [
            ("tetra", [(0, 0, 0), (2, 0, 0), (0, 2, 0), (0, 0, 2)]),
            ("cube", box((6, 0, 0), (8, 2, 2))),
            ("pyramid", [(0, 6, 0), (2, 6, 0), (2, 8, 0), (0, 8, 0), (1, 7, 2)]),
        ],
    ),
    "triangles_d_plus_one.json": doc(
        2,
        [
            ("a", [(0, 0), (1, 0), (0, 1)]),
            ("b", [(6, 0), (7, 0), (6, 1)]),
            ("c", [(3, 6), (4, 6), (3, 7)]),
        ],
    ),
    "four_prisms_r4.json": doc(
        4,
        [
            (f"P{i + 1}", [p + q for q in box((-s, -s), (s, s))])
            for i, (p, s) in enumerate(zip(SQUARE, (1, 2, 1, 2)))
        ],
    ),
    "simplices_m3_d4.json": doc(
        4,
        [
            (name, [tuple(c + (1 if k == j else 0) for k, c in enumerate(center)) for j in range(4)] + [center])
            for name, center in (
                ("s1", (0, 0, 0, 0)),
                ("s2", (10, 1, 0, 3)),
                ("s3", (2, 11, 5, 0)),
            )
        ],
    ),
    "two_disks.json": {
        "dimension": 2,
        "bodies": [
            {"name": "left", "kind": "disk", "center": ["-2", "0"], "radius": "1"},
            {"name": "right", "kind": "disk", "center": ["4", "0"], "radius": "2"},
        ],
        "partition": {"A": [1, 2], "B": []},
    },
    # a triangular prism whose coloring is not visible/covisible everywhere
    "prism_bad_coloring.json": doc(
        3,
        [("prism", [(0, 0, 0), (4, 0, 0), (0, 4, 0), (0, 0, 4), (4, 0, 4), (0, 4, 4)])],
        facet_colors=[
            {"normal": ["0", "0", "1"], "color": 3},
            {"normal": ["0", "0", "-1"], "color": 2},
            {"normal": ["-1", "0", "0"], "color": 1},
            {"normal": ["0", "-1", "0"], "color": 1},
            {"normal": ["1", "1", "0"], "color": 1},
        ],
    ),
    # opposite facets share a color: no point sees both x-facets, so {1} is neither
    "cube_colors.json": doc(
        3,
        [("cube", box((-1, -1, -1), (1, 1, 1)))],
        facet_colors=[
            {"normal": [str(s * (i == k)) for k in range(3)], "color": i + 1}
            for i in range(3)
            for s in (1, -1)
        ],
    ),
    # every proper facet subset of a simplex is visible: the hypothesis holds
    "tetra_colors.json": doc(
        3,
        [("tetra", [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])],
        facet_colors=[
            {"normal": ["-1", "0", "0"], "color": 1},
            {"normal": ["0", "-1", "0"], "color": 2},
            {"normal": ["0", "0", "-1"], "color": 3},
            {"normal": ["1", "1", "1"], "color": 3},
        ],
    ),
    "two_bodies_d3.json": doc(
        3,
        [
            ("cube", box((0, 0, 0), (2, 2, 2))),
            ("octahedron", [(6, 1, 1), (8, 1, 1), (7, 0, 1), (7, 2, 1), (7, 1, 0), (7, 1, 2)]),
        ],
    ),
    "tetrahedra_d_plus_one.json": doc(
        3,
        [
            (name, [tuple(c + (1 if k == j else 0) for k, c in enumerate(center)) for j in range(3)] + [center])
            for name, center in (
                ("t1", (0, 0, 0)),
                ("t2", (8, 0, 1)),
                ("t3", (1, 9, 0)),
                ("t4", (2, 1, 10)),
            )
        ],
    ),
}


def main(outdir="fixtures"):
    out = Path(outdir)
    out.mkdir(exist_ok=True)
    for name, data in FIXTURES.items():
        (out / name).write_text(json.dumps(data, indent=2) + "\n")
        print(out / name)


if __name__ == "__main__":
    main(*sys.argv[1:])
