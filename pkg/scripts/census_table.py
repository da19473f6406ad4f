#!/usr/bin/env python3
"""Per-pattern census with exact and asymptotic class counts."""

import argparse

from ucycles.classes import census


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("n", type=int)
    ap.add_argument("k", type=int)
    args = ap.parse_args()

    cs = census(args.n, args.k)
    print("pattern\tgood\tclasses\tasym\tforms\tsets\tawesome_sets")
    for r in cs.rows:
        asym = f"{r.asym_class_count:.2f}" + ("*" if r.gcd_mismatch else "")
        print(f"<{','.join(map(str, r.pattern))}>\t{r.goodness}\t{r.exact_class_count}\t{asym}"
              f"\t{r.exact_form_count}\t{r.exact_set_count}\t{r.awesome_set_count}")
    print(f"# good {cs.good_sets}/{cs.total_sets}, awesome {cs.awesome_sets}, bad {cs.bad_sets}")
    for p, ratio in cs.cross_ratios.items():
        print(f"# cross ratio <{','.join(map(str, p))}>: {float(ratio):.5f}")
    print("# * gcd of the pattern does not divide n, so the exact count is 0")


if __name__ == "__main__":
    main()
