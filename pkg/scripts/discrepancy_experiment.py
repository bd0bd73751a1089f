#!/usr/bin/env python3
"""Equidistribution experiment: discrepancy of straight-line orbits vs length.

Rational slopes concentrate on closed curves, so their discrepancy stalls;
quadratic irrationals decay roughly like 1/√N. Prints a table over several
slopes and crossing counts, on the square torus and on the three-square
staircase.

Usage: python scripts/discrepancy_experiment.py
"""

import math

from origamis.flow import discrepancy
from origamis.origami import st3, torus

SLOPES = [
    ("golden", (1 + math.sqrt(5)) / 2),
    ("sqrt2", math.sqrt(2)),
    ("1", 1.0),
    ("2/3", 2 / 3),
]
CROSSINGS = [1_000, 10_000, 100_000]


def main() -> None:
    for name, surface in (("torus", torus()), ("St(3)", st3())):
        print(f"\n{name}: discrepancy (grid 10x10 per square)")
        header = "slope".ljust(8) + "".join(f"N={n:<12}" for n in CROSSINGS)
        print(header)
        for label, slope in SLOPES:
            row = label.ljust(8)
            for n in CROSSINGS:
                row += f"{discrepancy(surface, slope, n, 10):<14.5f}"
            print(row)
        print("rational slopes stall; irrational ones decay ~ 1/sqrt(N)")


if __name__ == "__main__":
    main()
