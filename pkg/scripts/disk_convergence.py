"""Inscribed n-gons in two disjoint disks, refined along a schedule.

Prints, for the outer and inner partitions, the Cauchy gap at every level and
the distance of the final tangents to the analytic ones.

    python3 scripts/disk_convergence.py --schedule 8,16,32,64,128
"""

import argparse
import time
from dataclasses import dataclass
from fractions import Fraction

from polytangent.approx import (
    BodySpec,
    analytic_circle_tangents,
    angle_between,
    convergence_run,
    unit_form,
)
from polytangent.tangents import Partition


@dataclass
class Config:
    schedule: tuple = (8, 16, 32, 64)
    phase: Fraction = Fraction(0)
    c1: tuple = (-2, 0)
    r1: int = 1
    c2: tuple = (4, 0)
    r2: int = 2


def main(cfg: Config):
    bodies = [BodySpec("disk", cfg.c1, radius=cfg.r1), BodySpec("disk", cfg.c2, radius=cfg.r2)]
    lines = analytic_circle_tangents(cfg.c1, cfg.r1, cfg.c2, cfg.r2)
    for part, kind in ((Partition.from_A({0, 1}, 2), "outer"), (Partition.from_A({0}, 2), "inner")):
        t0 = time.perf_counter()
        run = convergence_run(bodies, part, cfg.schedule, cfg.phase)
        print(f"{kind} tangents, partition {part}: {run.verdict}, nested={run.nested}")
        print(f"  {'n':>5} {'angle gap':>12} {'offset gap':>12}")
        for lvl in run.levels:
            ag = "-" if lvl.angle_gap is None else f"{lvl.angle_gap:.3e}"
            og = "-" if lvl.offset_gap is None else f"{lvl.offset_gap:.3e}"
            print(f"  {lvl.n:>5} {ag:>12} {og:>12}")
        targets = [l.as_float() for l in lines if l.kind == kind]
        for H in run.final.hyperplanes:
            n, a = unit_form(H)
            ang, off = min((angle_between(n, m), abs(a - b)) for m, b in targets)
            print(f"  final vs analytic: angle {ang:.3e} rad, offset {off:.3e}")
        print(f"  angle between the two limits {run.limit_angle:.4f} rad ({time.perf_counter() - t0:.2f}s)")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--schedule", default="8,16,32,64")
    p.add_argument("--phase", default="0", help="rotation of the inscribed vertices (radians, rational)")
    a = p.parse_args()
    main(Config(tuple(int(x) for x in a.schedule.split(",")), Fraction(a.phase)))
