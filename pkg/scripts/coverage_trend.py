#!/usr/bin/env python3
"""Coverage of generated packings as n grows, for a fixed k."""

import argparse
import math
import time

from ucycles.assembler import generate_packing
from ucycles.classes import census


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=4)
    ap.add_argument("--n-min", type=int, default=8)
    ap.add_argument("--n-max", type=int, default=40)
    ap.add_argument("--rep-strategy", choices=("default", "search"), default="search")
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print("n\tL\tgcd\tcovered\tC(n,k)\tcoverage\tgood_frac\tawesome_frac\tseconds")
    for n in range(max(args.n_min, args.k + 2), args.n_max + 1):
        t = time.perf_counter()
        res = generate_packing(n, args.k, rep_strategy=args.rep_strategy, seed=args.seed)
        dt = time.perf_counter() - t
        cs = census(n, args.k)
        total = math.comb(n, args.k)
        print(f"{n}\t{res.L}\t{n // res.L}\t{res.covered}\t{total}\t{res.covered / total:.4f}"
              f"\t{cs.good_fraction:.4f}\t{cs.awesome_fraction:.4f}\t{dt:.2f}")


if __name__ == "__main__":
    main()
