#!/usr/bin/env python3
"""Scan the measurement family and write the entropy and bound curves as CSV.

The output matches `eurkit sweep` byte for byte; this script exists so the
curves can be regenerated alongside custom grids from Python tooling.
"""

import argparse

import numpy as np

from eurkit.cli import sweep_csv
from eurkit.family import sweep


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=int, default=101, help="grid size over [0, 1]")
    parser.add_argument("--out", default="-", help="output path, '-' for stdout")
    args = parser.parse_args()
    if args.steps < 2:
        parser.error("--steps must be >= 2")
    rows = sweep(np.linspace(0.0, 1.0, args.steps))
    text = sweep_csv(rows)
    if args.out == "-":
        print(text, end="")
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        print(f"wrote {len(rows)} rows to {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
