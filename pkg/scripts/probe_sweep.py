#!/usr/bin/env python3
"""Sweep the weight-degree non-negativity probe over a weight box and report
which probe element witnesses each weight.

Usage: python3 scripts/probe_sweep.py [--n-max 5] [--box 5] [--drop-v]
"""

import argparse
from collections import Counter

from affmod.degrees import DEFAULT_PROBE, exhaustive_probe


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--box", type=int, default=5)
    ap.add_argument(
        "--drop-v", action="store_true",
        help="restrict the probe set to x, y, u (shows the n=1 gap)",
    )
    args = ap.parse_args()

    names = ("x", "y", "u") if args.drop_v else DEFAULT_PROBE
    results = exhaustive_probe(range(1, args.n_max + 1), args.box, names)
    for n in range(1, args.n_max + 1):
        rows = [r for r in results if r["n"] == n]
        tally = Counter(r["witness"] or "(none)" for r in rows)
        gaps = [tuple(r["weight"]) for r in rows if r["verdict"] != "witness"]
        print(f"n = {n}: witnesses {dict(sorted(tally.items()))}")
        if gaps:
            print(f"  weights without witness: {gaps}")


if __name__ == "__main__":
    main()
