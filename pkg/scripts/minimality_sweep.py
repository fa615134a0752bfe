"""Compare greedy flow-up classes against two notions of "smallest".

dominance: no nonnegative class is entry-wise <= the greedy class (and different).
universal: no class with positive non-leading entries is smaller in *any* entry.

Usage:
    python scripts/minimality_sweep.py [--instances 300] [--max-n 5] [--max-label 12] [--seed 0]
"""

import argparse
import math
import random
import time
from functools import reduce

from gsplines import flowup_basis, minimality_scan


def lcm(values):
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--instances", type=int, default=300)
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--max-label", type=int, default=12)
    ap.add_argument("--bound-cap", type=int, default=5000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--show", type=int, default=5, help="examples to print per criterion")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    failures = {"dominance": [], "universal": []}
    classes = 0
    t0 = time.time()
    for _ in range(args.instances):
        labels = tuple(rng.randint(1, args.max_label) for _ in range(rng.randint(3, args.max_n)))
        bound = min(lcm(labels), args.bound_cap)
        for k, cls in enumerate(flowup_basis(labels)):
            if k == 0:
                continue
            classes += 1
            for criterion, found in failures.items():
                verdict = minimality_scan(labels, k, cls.spline, bound, criterion=criterion)
                if not verdict.minimal:
                    found.append((labels, k, cls.spline.values, verdict.counterexample.values))

    print(f"{args.instances} cycles, {classes} classes with k >= 1, {time.time() - t0:.1f}s")
    for criterion, found in failures.items():
        print(f"\n{criterion}: {len(found)} classes beaten")
        for labels, k, greedy, other in found[: args.show]:
            print(f"  labels={labels} k={k} greedy={greedy} beaten by {other}")


if __name__ == "__main__":
    main()
