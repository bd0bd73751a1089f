"""Enumeration of origamis up to a square count, and the JSONL catalog.

Enumeration walks (h, v) with h fixed to one representative per cycle type
(every pair is simultaneously conjugate to such a pair), keeps the transitive
ones, and deduplicates by canonical form; the result is grouped into
SL₂(ℤ)-orbits.  Output order is lexicographic on canonical forms so repeated
runs produce byte-identical catalogs.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import asdict, dataclass
from itertools import permutations

from .action import orbit
from .origami import Origami, Stratum, canonical_form, genus, is_reduced, stratum
from .perm import Permutation

DEFAULT_BOUND = 8


@dataclass(frozen=True)
class CatalogEntry:
    origami: str  # canonical text form, the primary key
    n: int
    genus: int
    stratum: str
    reduced: bool
    orbit_id: str
    index: int
    cusp_widths: tuple[int, ...]
    curve_genus: int

    def to_json(self) -> str:
        d = asdict(self)
        d["cusp_widths"] = list(self.cusp_widths)
        return json.dumps(d, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "CatalogEntry":
        d = json.loads(text)
        d["cusp_widths"] = tuple(d["cusp_widths"])
        return CatalogEntry(**d)


def _partitions(n: int):
    """Partitions of n, parts decreasing."""
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in _partitions(n - first):
            if not rest or rest[0] <= first:
                yield (first,) + rest


def _cycle_type_rep(par) -> tuple[int, ...]:
    """One-line images of the permutation (1..λ₁)(λ₁+1..λ₁+λ₂)…"""
    images = []
    start = 1
    for part in par:
        images.extend(list(range(start + 1, start + part)) + [start])
        start += part
    return tuple(images)


def _transitive_pair(h_img, v_img) -> bool:
    n = len(h_img)
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for img in (h_img, v_img):
        for i in range(1, n + 1):
            ri, rj = find(i), find(img[i - 1])
            if ri != rj:
                parent[ri] = rj
    return len({find(i) for i in range(1, n + 1)}) == 1


def canonical_origamis(n: int) -> list[Origami]:
    """All connected n-square origamis up to relabeling, lexicographically."""
    from .origami import _canonical_key

    keys = set()
    for par in _partitions(n):
        h_img = _cycle_type_rep(par)
        for v_perm in permutations(range(1, n + 1)):
            if not _transitive_pair(h_img, v_perm):
                continue
            keys.add(_canonical_key(h_img, v_perm))
    return [Origami(Permutation(k[0]), Permutation(k[1])) for k in sorted(keys)]


def enumerate_origamis(
    n: int,
    stratum_filter: Stratum | str | None = None,
    reduced_only: bool = False,
    bound: int = DEFAULT_BOUND,
) -> list[CatalogEntry]:
    """CatalogEntries for all n-square origamis passing the filters, grouped
    into SL₂(ℤ)-orbits; the orbit id is the least member's canonical text."""
    if not 1 <= n <= bound:
        raise ValueError(f"n must lie in 1..{bound}, got {n}")
    if isinstance(stratum_filter, str):
        stratum_filter = Stratum.parse(stratum_filter)
    surfaces = canonical_origamis(n)
    selected = []
    for o in surfaces:
        if stratum_filter is not None and stratum(o) != stratum_filter:
            continue
        if reduced_only and not is_reduced(o):
            continue
        selected.append(o)
    # group into orbits; filters are SL2(Z)-invariant so orbits never straddle them
    by_text = {o.to_text(): o for o in selected}
    orbit_of: dict[str, tuple[str, object]] = {}
    for text in sorted(by_text):
        if text in orbit_of:
            continue
        report = orbit(by_text[text])
        members = set()
        for rep in report.representatives:
            members.add(canonical_form(rep).to_text())
            flipped = Origami(rep.h.inverse(), rep.v.inverse())
            members.add(canonical_form(flipped).to_text())
        orbit_id = min(members)
        for m in members:
            assert m in by_text, f"orbit member {m} missing from the enumeration"
            orbit_of[m] = (orbit_id, report)
    entries = []
    for text in sorted(by_text):
        o = by_text[text]
        orbit_id, report = orbit_of[text]
        entries.append(
            CatalogEntry(
                origami=text,
                n=n,
                genus=genus(o),
                stratum=str(stratum(o)),
                reduced=is_reduced(o),
                orbit_id=orbit_id,
                index=report.index,
                cusp_widths=report.cusp_widths(),
                curve_genus=report.curve_genus,
            )
        )
    return entries


class CatalogError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


def _read_entries(path) -> list[CatalogEntry]:
    entries = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                entries.append(CatalogEntry.from_json(line))
            except (json.JSONDecodeError, KeyError, TypeError) as exc:
                raise CatalogError(f"malformed catalog record ({exc})", lineno) from None
    return entries


def catalog_write(path, entries) -> tuple[int, int]:
    """Append new entries (keyed by canonical origami text); duplicates are
    skipped with a warning.  Returns (written, skipped)."""
    try:
        existing = {e.origami for e in _read_entries(path)}
    except FileNotFoundError:
        existing = set()
    written = skipped = 0
    with open(path, "a", encoding="utf-8") as fh:
        for e in entries:
            if e.origami in existing:
                warnings.warn(f"duplicate canonical key skipped: {e.origami}")
                skipped += 1
                continue
            fh.write(e.to_json() + "\n")
            existing.add(e.origami)
            written += 1
    return written, skipped


def catalog_query(
    path,
    n: int | None = None,
    stratum_filter: str | None = None,
    orbit_id: str | None = None,
) -> list[CatalogEntry]:
    out = []
    for e in _read_entries(path):
        if n is not None and e.n != n:
            continue
        if stratum_filter is not None and e.stratum != stratum_filter:
            continue
        if orbit_id is not None and e.orbit_id != orbit_id:
            continue
        out.append(e)
    return out
