#!/usr/bin/env python3
"""Survey the SL2(Z)-orbits of all reduced origamis up to a square count.

Prints one row per orbit (least canonical member, index, cusp widths, curve
genus) and a per-stratum orbit tally, which for H(2) exhibits the split into
two Teichmüller disks at n = 5.

Usage: python scripts/orbit_survey.py [max_n]
"""

import sys
from collections import Counter

from origamis.catalog import enumerate_origamis


def main(max_n: int) -> None:
    for n in range(1, max_n + 1):
        entries = enumerate_origamis(n, reduced_only=True)
        orbits = {}
        for e in entries:
            orbits.setdefault(e.orbit_id, []).append(e)
        print(f"\nn = {n}: {len(entries)} reduced origamis, {len(orbits)} orbits")
        for oid in sorted(orbits):
            members = orbits[oid]
            rep = members[0]
            print(
                f"  {rep.stratum:<8} index {rep.index:>3}  "
                f"cusp widths {rep.cusp_widths}  curve genus {rep.curve_genus}  "
                f"[{oid}]"
            )
        tally = Counter(members[0].stratum for members in orbits.values())
        per_stratum = ", ".join(f"{s}: {c}" for s, c in sorted(tally.items()))
        print(f"  orbits per stratum: {per_stratum}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 6)
