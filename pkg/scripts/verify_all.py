#!/usr/bin/env python3
"""Run every verification check and write a JSON-lines report.

Usage: python3 scripts/verify_all.py [--field rational|fp:P] [--out report.jsonl]
"""

import argparse
import sys

from affmod.report import summarize, write_json_lines
from affmod.scalars import field_from_spec
from affmod.verifier import run_all


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--field", default="rational")
    ap.add_argument("--out", default="report.jsonl")
    args = ap.parse_args()

    reports = run_all(field_from_spec(args.field))
    summarize(reports, out=sys.stdout)
    write_json_lines(reports, args.out)
    print(f"wrote {args.out}")
    return 0 if all(r.ok for r in reports) else 1


if __name__ == "__main__":
    raise SystemExit(main())
