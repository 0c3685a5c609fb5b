#!/usr/bin/env python3
"""Print the verification fidelity of every bundled projection-table row."""

import argparse

from eurkit.pulses import PROJECTION_TABLE, verify_table


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--threshold", type=float, default=1.0 - 1e-9, help="pass threshold")
    args = parser.parse_args()
    checks = verify_table(threshold=args.threshold)
    for row, check in zip(PROJECTION_TABLE, checks):
        pulses = " ".join(f"{p.channel.id}:{p.angle:.6f}" for p in row.preparation_pulses())
        status = "pass" if check.passed else "FAIL"
        print(f"row {check.index:2d}  fidelity {check.fidelity:.12f}  {status}  [{pulses or 'identity'}]")
    failed = [c.index for c in checks if not c.passed]
    if failed:
        print(f"failed rows: {', '.join(map(str, failed))}")
        return 2
    print("all rows verified")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
