"""Print smallest flow-up bases, showing where the leading entry differs from the
product of the labels on the edges below it.

Usage:
    python scripts/basis_table.py 2,3,5 5,4,6 6,10,15 5,2,4,8
    python scripts/basis_table.py --random 10 --max-n 6 --seed 1
"""

import argparse
import random

from gsplines import flowup_basis


def show(labels):
    basis = flowup_basis(labels)
    n = len(labels)
    print(f"labels {labels}")
    for cls in basis:
        k = cls.k
        note = ""
        if k:
            # edges from v_{k+1} down to lower vertices: l_k, plus l_n at the top vertex
            below = labels[k - 1] * (labels[-1] if k == n - 1 else 1)
            if cls.leading_entry != below:
                note = f"   leading {cls.leading_entry} != product {below}"
        print(f"  G_{k} = {cls.spline.values}{note}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("cycles", nargs="*", help="comma-separated edge labels")
    ap.add_argument("--random", type=int, default=0)
    ap.add_argument("--max-n", type=int, default=6)
    ap.add_argument("--max-label", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    todo = [tuple(int(x) for x in c.split(",")) for c in args.cycles]
    todo += [
        tuple(rng.randint(1, args.max_label) for _ in range(rng.randint(3, args.max_n)))
        for _ in range(args.random)
    ]
    for labels in todo or [(2, 3, 5), (5, 4, 6), (6, 10, 15), (5, 2, 4, 8)]:
        show(labels)


if __name__ == "__main__":
    main()
