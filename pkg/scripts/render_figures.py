"""Render the fixture scenes: SVG for the planar ones, OBJ for R^3.

    python3 scripts/render_figures.py --out figures/
"""

import argparse
from dataclasses import dataclass
from pathlib import Path

from polytangent.approx import BodySpec, inscribe_polytope
from polytangent.documents import load_family_document
from polytangent.render import render_obj, render_svg
from polytangent.separation import Family
from polytangent.tangents import all_tangents

ROOT = Path(__file__).resolve().parent.parent


@dataclass
class Config:
    out: Path = ROOT / "figures"
    disk_n: int = 32


def tangents(fam):
    return [H for pair in all_tangents(fam) for H in pair.hyperplanes]


def main(cfg: Config):
    cfg.out.mkdir(parents=True, exist_ok=True)
    jobs = {
        "two_squares.svg": (load_family_document(ROOT / "fixtures/two_squares.json").family(), render_svg),
        "three_bodies_d3.obj": (load_family_document(ROOT / "fixtures/three_bodies_d3.json").family(), render_obj),
    }
    disks = [BodySpec("disk", (-2, 0), radius=1), BodySpec("disk", (4, 0), radius=2)]
    jobs[f"two_disks_n{cfg.disk_n}.svg"] = (
        Family(tuple(inscribe_polytope(b, cfg.disk_n) for b in disks), 2),
        render_svg,
    )
    for name, (fam, fn) in jobs.items():
        (cfg.out / name).write_text(fn(fam, tangents(fam)))
        print(cfg.out / name)


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", default=str(ROOT / "figures"))
    p.add_argument("--disk-n", type=int, default=32)
    a = p.parse_args()
    main(Config(Path(a.out), a.disk_n))
