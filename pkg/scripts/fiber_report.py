#!/usr/bin/env python3
"""Print the classified fiber table for a range of n and parameter values.

Usage: python3 scripts/fiber_report.py [--n-max 5] [--lambda 1/2 --lambda 3 ...]
"""

import argparse
from fractions import Fraction

from affmod import format_poly
from affmod.fibers import fiber_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument(
        "--lambda", dest="lambdas", type=Fraction, action="append",
        help="fiber parameter, repeatable (default: 0 1 2 -1 1/2)",
    )
    args = ap.parse_args()
    lambdas = args.lambdas or [0, 1, 2, -1, Fraction(1, 2)]

    for n in range(1, args.n_max + 1):
        print(f"n = {n}")
        for row in fiber_table(n, lambdas):
            print(
                f"  {row.generator} = {str(row.lam):>4}:  "
                f"{str(row.curve_class):<12}  {format_poly(row.fiber)}"
            )


if __name__ == "__main__":
    main()
