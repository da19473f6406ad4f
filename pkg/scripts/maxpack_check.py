#!/usr/bin/env python3
"""Exhaustive longest packings for tiny (n, k), against the generator."""

import argparse
import math

from ucycles.assembler import generate_packing
from ucycles.errors import BudgetExceeded
from ucycles.verifier import exhaustive_max_packing

CASES = [(4, 2), (5, 2), (5, 3), (6, 2), (6, 4), (7, 5)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--budget", type=int, default=10**6, help="DFS nodes per case")
    args = ap.parse_args()

    print("n\tk\tC(n,k)\tbest\tgenerated\tnodes")
    for n, k in CASES:
        gen = len(generate_packing(n, k).sequence)
        try:
            res = exhaustive_max_packing(n, k, node_budget=args.budget)
            best, nodes = str(res.best_length), res.nodes
        except BudgetExceeded as exc:
            best, nodes = f">={exc.best.best_length}", args.budget
        print(f"{n}\t{k}\t{math.comb(n, k)}\t{best}\t{gen}\t{nodes}")


if __name__ == "__main__":
    main()
