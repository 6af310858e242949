#!/usr/bin/env python3
"""Print the low-degree comparison tables: graded dimensions, the two
monomial bases, and the word-to-section dictionary.

Usage: python3 scripts/low_degree_tables.py [MAX_DEGREE]
"""

import sys
from collections import defaultdict

from dp3ring import cox, ore, thcr
from dp3ring.ncpoly import XY, word_degree
from dp3ring.picard import chi, h0_formula, twist_divisor


def main() -> None:
    cap = int(sys.argv[1]) if len(sys.argv) > 1 else 6

    print("degree | dim (basis) | sections | formula | chi")
    for n in range(cap + 1):
        div = twist_divisor(n)
        print(
            f"{n:6d} | {len(ore.pbw_basis(n)):11d} | {cox.section_count(div):8d}"
            f" | {h0_formula(n):7d} | {chi(div):3d}   D = {div}"
        )

    print("\nordered-monomial basis per degree:")
    for n in range(cap + 1):
        rendered = ", ".join(m.render() for m in ore.pbw_basis(n))
        print(f"  {n}: {rendered}")

    print("\nsection-monomial basis per degree:")
    for n in range(cap + 1):
        rendered = ", ".join(m.render() for m in thcr.twist_basis(n).basis)
        print(f"  {n}: {rendered}")

    print("\nword dictionary (degrees 1..6):")
    by_degree = defaultdict(list)
    for word, mono in thcr.LOW_DEGREE_TABLE:
        by_degree[word_degree(word, XY)].append(f"{word} = {mono}")
    for degree in sorted(by_degree):
        print(f"  {degree}: " + ",  ".join(by_degree[degree]))


if __name__ == "__main__":
    main()
