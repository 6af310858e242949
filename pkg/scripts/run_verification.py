#!/usr/bin/env python3
"""Run the full verification suite and print the report.

Usage: python3 scripts/run_verification.py [MAX_DEGREE]
Exit code 0 iff every check passed.
"""

import sys

from dp3ring.verify import run_all


def main() -> int:
    max_degree = int(sys.argv[1]) if len(sys.argv) > 1 else 24
    report = run_all(max_degree)
    print(report.to_text())
    return 0 if report.all_passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
