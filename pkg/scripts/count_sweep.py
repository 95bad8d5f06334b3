"""Count tangents on random strongly separated families and compare with 2^d.

Also records the largest number of oracle tangents sharing a partition class
(never more than two for separated families) and wall time per family.

    python3 scripts/count_sweep.py --dims 2,3 --trials 10 --seed 1
"""

import argparse
import random
import sys
import time
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from polytangent.tangents import all_tangents, brute_force_tangents, oracle_guard, tangent_set

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
from conftest import random_family  # noqa: E402


@dataclass
class Config:
    dims: tuple = (2, 3)
    trials: int = 10
    seed: int = 1
    oracle: bool = True


def main(cfg: Config):
    rng = random.Random(cfg.seed)
    print(f"{'d':>2} {'trial':>5} {'verts':>5} {'tangents':>8} {'2^d':>4} {'oracle':>7} {'max/class':>9} {'sec':>6}")
    for d in cfg.dims:
        for k in range(cfg.trials):
            fam = random_family(rng, d)
            t0 = time.perf_counter()
            pairs = all_tangents(fam)
            count = len({H.unoriented() for p in pairs for H in p.hyperplanes})
            nverts = len(set(fam.all_vertices()))
            agree, worst = "-", "-"
            if cfg.oracle and nverts <= oracle_guard():
                found = brute_force_tangents(fam)
                agree = "yes" if set(found) == tangent_set(pairs) else "NO"
                worst = max(Counter(p for _, p in found).values())
            dt = time.perf_counter() - t0
            print(f"{d:>2} {k:>5} {nverts:>5} {count:>8} {2**d:>4} {agree:>7} {worst!s:>9} {dt:>6.2f}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--dims", default="2,3")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--no-oracle", action="store_true")
    a = p.parse_args()
    main(Config(tuple(int(x) for x in a.dims.split(",")), a.trials, a.seed, not a.no_oracle))
