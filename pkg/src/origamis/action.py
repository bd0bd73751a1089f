"""The SL₂(ℤ)-action on origamis: orbits, Veech groups, cusps, elliptic points.

Action formulas, fixed by the package's worked fixtures:

    act_T: (h, v) -> (h, v∘h⁻¹)        (horizontal shear)
    act_S: (h, v) -> (v, h⁻¹)          (quarter rotation)

With these, T·St(3) is the other three-square surface, T²·St(3) ≅ St(3) and
S·St(3) ≅ St(3), as they must be.

Words carry their integer matrix with the generator matrices
T = [[1,1],[0,1]] and S = [[0,-1],[1,0]].  The realized quarter rotation is
the clockwise one, i.e. S up to the central element -I; all membership and
orbit computations here are projective (-I is identified away), which is
exact for genus ≤ 2 and flagged otherwise in OrbitReport.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .origami import Origami, _canonical_key, canonical_form
from .perm import Permutation, compose

INFINITY = math.inf

_GEN_MATS = {
    "T": ((1, 1), (0, 1)),
    "T^-1": ((1, -1), (0, 1)),
    "S": ((0, -1), (1, 0)),
    "S^-1": ((0, 1), (-1, 0)),
}
_INVERSE_GEN = {"T": "T^-1", "T^-1": "T", "S": "S^-1", "S^-1": "S"}


def _mat_mul2(A, B):
    return (
        (A[0][0] * B[0][0] + A[0][1] * B[1][0], A[0][0] * B[0][1] + A[0][1] * B[1][1]),
        (A[1][0] * B[0][0] + A[1][1] * B[1][0], A[1][0] * B[0][1] + A[1][1] * B[1][1]),
    )


@dataclass(frozen=True)
class SL2ZWord:
    """A word in the generators T, T⁻¹, S, S⁻¹, applied right-to-left."""

    gens: tuple[str, ...] = ()

    def __post_init__(self):
        for g in self.gens:
            if g not in _GEN_MATS:
                raise ValueError(f"unknown generator {g!r}")

    @cached_property
    def matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        M = ((1, 0), (0, 1))
        for g in self.gens:
            M = _mat_mul2(M, _GEN_MATS[g])
        return M

    def __mul__(self, other: "SL2ZWord") -> "SL2ZWord":
        return SL2ZWord(self.gens + other.gens)

    def inverse(self) -> "SL2ZWord":
        return SL2ZWord(tuple(_INVERSE_GEN[g] for g in reversed(self.gens)))

    def free_reduce(self) -> "SL2ZWord":
        out: list[str] = []
        for g in self.gens:
            if out and out[-1] == _INVERSE_GEN[g]:
                out.pop()
            else:
                out.append(g)
        return SL2ZWord(tuple(out))

    def __pow__(self, k: int) -> "SL2ZWord":
        if k < 0:
            return self.inverse() ** (-k)
        return SL2ZWord(self.gens * k)

    def __str__(self) -> str:
        return " ".join(self.gens) if self.gens else "1"


T_WORD = SL2ZWord(("T",))
S_WORD = SL2ZWord(("S",))


def word_for_matrix(M) -> SL2ZWord:
    """A word in T, S whose matrix equals M exactly (M in SL₂(ℤ)).

    Euclid on the first column: T-powers shrink the top entry mod the bottom
    one, S swaps rows; what remains is ±T^k, and -I = S².
    """
    a, b = M[0]
    c, d = M[1]
    if a * d - b * c != 1:
        raise ValueError(f"matrix {M} is not in SL2(Z)")
    gens: list[str] = []  # left factors applied to M, in application order
    while c != 0:
        q = a // c
        if q:
            # T^-q * M
            a, b = a - q * c, b - q * d
            gens.extend(["T^-1" if q > 0 else "T"] * abs(q))
        # S^-1 * M = [[c, d], [-a, -b]]
        a, b, c, d = c, d, -a, -b
        gens.append("S^-1")
    assert a == d in (1, -1) and c == 0
    if a == -1:
        gens.extend(["S^-1", "S^-1"])  # kill -I
        b = -b
    if b:
        gens.extend(["T^-1" if b > 0 else "T"] * abs(b))
    # gens applied in order reduce M to I: gens[k]···gens[0]·M = I, so
    # M = gens[0]⁻¹·gens[1]⁻¹···gens[k]⁻¹ read as a left-to-right word
    word = SL2ZWord(tuple(_INVERSE_GEN[g] for g in gens)).free_reduce()
    assert word.matrix == (tuple(M[0]), tuple(M[1]))
    return word


# -- the action ------------------------------------------------------------------


def act_T(o: Origami) -> Origami:
    return Origami(o.h, compose(o.v, o.h.inverse()))


def act_T_inv(o: Origami) -> Origami:
    return Origami(o.h, compose(o.v, o.h))


def act_S(o: Origami) -> Origami:
    return Origami(o.v, o.h.inverse())


def act_S_inv(o: Origami) -> Origami:
    return Origami(o.v.inverse(), o.h)


def act_minus_id(o: Origami) -> Origami:
    return Origami(o.h.inverse(), o.v.inverse())


_ACTS = {"T": act_T, "T^-1": act_T_inv, "S": act_S, "S^-1": act_S_inv}


def apply_word(w: SL2ZWord, o: Origami) -> Origami:
    for g in reversed(w.gens):
        o = _ACTS[g](o)
    return o


# -- point transport (used to cross-check flow against the action) ----------------


def act_point(gen: str, o: Origami, sq: int, x, y):
    """Image of the point (sq, x, y) under one generator, on the new surface.

    T shears each square and re-cuts at x = 1; S rotates clockwise. Points on
    a cut line get the representative lying in the square named first below.
    """
    if gen == "T":
        if x + y < 1:
            return (sq, x + y, y)
        return (o.h(sq), x + y - 1, y)
    if gen == "T^-1":
        if x >= y:
            return (sq, x - y, y)
        return (o.h.inverse()(sq), x - y + 1, y)
    if gen == "S":
        return (sq, y, 1 - x)
    if gen == "S^-1":
        return (sq, 1 - y, x)
    raise ValueError(f"unknown generator {gen!r}")


def act_direction(gen: str, p, q):
    """Direction transform realized by the point maps (S acts as the clockwise
    rotation, i.e. the matrix [[0,1],[-1,0]])."""
    if gen == "T":
        return (p + q, q)
    if gen == "T^-1":
        return (p - q, q)
    if gen == "S":
        return (q, -p)
    if gen == "S^-1":
        return (-q, p)
    raise ValueError(f"unknown generator {gen!r}")


def transport_point(w: SL2ZWord, o: Origami, sq: int, x, y):
    """Push (sq, x, y) through the whole word; returns (surface, sq, x, y)."""
    for g in reversed(w.gens):
        sq, x, y = act_point(g, o, sq, x, y)
        o = _ACTS[g](o)
    return o, sq, x, y


def transport_direction(w: SL2ZWord, p, q):
    for g in reversed(w.gens):
        p, q = act_direction(g, p, q)
    return p, q


# -- orbits ------------------------------------------------------------------------


def _proj_key(o: Origami):
    """Canonical key of the projective class {o, -I·o}, plus whether -I moved o."""
    k1 = _canonical_key(o.h.images, o.v.images)
    k2 = _canonical_key(o.h.inverse().images, o.v.inverse().images)
    return min(k1, k2), k1 != k2


def _origami_from_key(key) -> Origami:
    return Origami(Permutation(key[0]), Permutation(key[1]))


@dataclass(frozen=True)
class Cusp:
    width: int
    cylinder_count: int
    representative: Origami


@dataclass(frozen=True)
class OrbitReport:
    representatives: tuple[Origami, ...]
    index: int
    cusps: tuple[Cusp, ...]
    e2: int
    e3: int
    curve_genus: int
    input_reduced: bool
    minus_id_nontrivial: bool

    def cusp_widths(self) -> tuple[int, ...]:
        return tuple(sorted((c.width for c in self.cusps), reverse=True))


def orbit(o: Origami) -> OrbitReport:
    """Breadth-first closure under T, T⁻¹, S with projective deduplication.

    Cusps are the T-orbits on the closure (width = orbit size, decoration =
    horizontal cylinder count of a representative); e2 and e3 count the fixed
    points of S and of S∘T; the curve genus comes from the index formula
    1 + index/12 - e2/4 - e3/3 - cusps/2 for subgroups of the modular group.
    """
    from .cylinders import horizontal_decomposition

    from .origami import is_reduced

    reduced = is_reduced(o)
    start_key, start_flag = _proj_key(canonical_form(o))
    seen = {start_key: _origami_from_key(start_key)}
    minus_nontrivial = start_flag
    frontier = [start_key]
    while frontier:
        new_frontier = []
        for key in frontier:
            rep = seen[key]
            for step in (act_T, act_T_inv, act_S):
                img_key, flag = _proj_key(step(rep))
                minus_nontrivial = minus_nontrivial or flag
                if img_key not in seen:
                    seen[img_key] = _origami_from_key(img_key)
                    new_frontier.append(img_key)
        frontier = new_frontier
    index = len(seen)

    def t_image(key):
        return _proj_key(act_T(seen[key]))[0]

    # cusps: cycles of act_T on the orbit
    cusps = []
    unassigned = set(seen)
    for key in sorted(seen):
        if key not in unassigned:
            continue
        cyc = [key]
        unassigned.discard(key)
        nxt = t_image(key)
        while nxt != key:
            cyc.append(nxt)
            unassigned.discard(nxt)
            nxt = t_image(nxt)
        rep = seen[cyc[0]]
        cusps.append(Cusp(len(cyc), len(horizontal_decomposition(rep)), rep))
    cusps.sort(key=lambda c: -c.width)

    assert sum(c.width for c in cusps) == index, "cusp widths must partition the orbit"
    e2 = sum(1 for key in seen if _proj_key(act_S(seen[key]))[0] == key)
    e3 = sum(1 for key in seen if _proj_key(act_S(act_T(seen[key])))[0] == key)
    g = Fraction(1) + Fraction(index, 12) - Fraction(e2, 4) - Fraction(e3, 3) - Fraction(len(cusps), 2)
    assert g.denominator == 1 and g >= 0, f"bad curve genus {g}"
    return OrbitReport(
        representatives=tuple(seen[k] for k in sorted(seen)),
        index=index,
        cusps=tuple(cusps),
        e2=e2,
        e3=e3,
        curve_genus=int(g),
        input_reduced=reduced,
        minus_id_nontrivial=minus_nontrivial,
    )


def in_veech_group(o: Origami, w: SL2ZWord) -> bool:
    """Whether the word's matrix stabilizes o (projectively: up to -I)."""
    key, _ = _proj_key(o)
    img_key, _ = _proj_key(apply_word(w, o))
    return key == img_key


@dataclass(frozen=True)
class SlopeCusp:
    cusp_index: int
    cylinder_count: int
    width: int


def slope_cusp(o: Origami, p: int, q: int, report: OrbitReport | None = None) -> SlopeCusp:
    """Which cusp of the Teichmüller curve the direction (p, q) escapes into.

    Transports the direction to horizontal and locates the T-orbit of the
    transported surface inside orbit(o).
    """
    from .cylinders import direction_to_horizontal

    if (p, q) == (0, 0):
        raise ValueError("direction (0, 0)")
    if math.gcd(p, q) != 1:
        raise ValueError(f"direction ({p}, {q}) is not primitive")
    if report is None:
        report = orbit(o)
    w = direction_to_horizontal(p, q)
    key, _ = _proj_key(apply_word(w, o))
    for i, cusp in enumerate(report.cusps):
        cusp_keys = set()
        k = _proj_key(cusp.representative)[0]
        for _ in range(cusp.width):
            cusp_keys.add(k)
            k = _proj_key(act_T(_origami_from_key(k)))[0]
        if key in cusp_keys:
            return SlopeCusp(i, cusp.cylinder_count, cusp.width)
    raise AssertionError("transported surface left its own orbit")


# -- hyperbolic helpers for the Teichmüller disk of the torus ----------------------


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def geodesic_endpoints(A):
    """Endpoints at infinity (b/a, d/c) of the hyperbolic geodesic traced by
    the diagonal flow applied to A; a zero denominator gives the point ∞."""
    (a, b), (c, d) = A
    a, b, c, d = map(_frac, (a, b, c, d))
    if a * d - b * c <= 0:
        raise ValueError("need det A > 0")
    if a == 0 and c == 0:
        raise ValueError("zero first column")
    first = b / a if a != 0 else INFINITY
    second = d / c if c != 0 else INFINITY
    return first, second


@dataclass(frozen=True)
class HorocycleData:
    endpoint: object  # Fraction or ∞
    apogee: tuple | None  # (x, y) of the topmost point, None when based at ∞
    based_at_infinity: bool = False


def horocycle_data(A) -> HorocycleData:
    """Base point d/c and apogee (d/c, 1/c²) of the horocycle traced by the
    unipotent flow applied to A ∈ SL₂(ℝ); c = 0 means the horocycle is the
    horizontal line based at ∞."""
    (a, b), (c, d) = A
    a, b, c, d = map(_frac, (a, b, c, d))
    if a * d - b * c != 1:
        raise ValueError("need det A = 1")
    if c == 0:
        return HorocycleData(INFINITY, None, based_at_infinity=True)
    return HorocycleData(d / c, (d / c, 1 / (c * c)))


def torus_point(u, v) -> complex:
    """Point of the upper half-plane representing the torus with lattice basis
    (u, v): the ratio z(v)/z(u) for a positively oriented basis."""
    ux, uy = map(_frac, u)
    vx, vy = map(_frac, v)
    det = ux * vy - uy * vx
    if det == 0:
        raise ValueError("colinear basis vectors")
    if det < 0:
        raise ValueError("basis is negatively oriented")
    norm = ux * ux + uy * uy
    re = (vx * ux + vy * uy) / norm
    im = det / norm
    return complex(float(re), float(im))
