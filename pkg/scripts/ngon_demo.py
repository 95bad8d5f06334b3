"""Pyramid over an N-gon between two ball stand-ins: tangent count vs N.

Without strong separation the 2^d = 8 bound does not apply; the count grows
with N.

    python3 scripts/ngon_demo.py --sizes 3,4,5,6,7
"""

import argparse
import time
from dataclasses import dataclass

from polytangent.approx import ngon_pyramid_demo


@dataclass
class Config:
    sizes: tuple = (3, 4, 5, 6, 7)
    guard: int = 200


def main(cfg: Config):
    print(f"{'N':>3} {'tangent planes':>15} {'separated':>10} {'failing I':>10} {'sec':>6}")
    for N in cfg.sizes:
        t0 = time.perf_counter()
        rep = ngon_pyramid_demo(N, guard=cfg.guard)
        failing = "-" if rep.failing_bipartition is None else str(sorted(i + 1 for i in rep.failing_bipartition))
        dt = time.perf_counter() - t0
        print(f"{N:>3} {rep.tangent_count:>15} {str(rep.strongly_separated):>10} {failing:>10} {dt:>6.2f}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", default="3,4,5,6,7")
    p.add_argument("--guard", type=int, default=200)
    a = p.parse_args()
    main(Config(tuple(int(x) for x in a.sizes.split(",")), a.guard))
