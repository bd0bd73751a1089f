"""Square-tiled surfaces and their intrinsic invariants.

An origami is a pair of permutations (h, v) of the squares 1..n: h(s) is the
square glued to the right of s, v(s) the square glued on top. The pair must
act transitively, otherwise the surface is disconnected.

Corner convention: the bottom-left corner of square s represents a surface
vertex; two corners coincide exactly when their squares lie in the same cycle
of the commutator c = h∘v∘h⁻¹∘v⁻¹ (composition right-to-left as everywhere in
this package). A cycle of length ℓ is a cone point of angle 2πℓ.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property

from .intlattice import hermite_form, is_standard_lattice
from .perm import Permutation, compose, conjugate, cycles, is_transitive


@dataclass(frozen=True)
class Stratum:
    """Multiset of positive cone-point orders, sorted decreasingly.

    The empty tuple denotes H(0), the flat tori.
    """

    orders: tuple[int, ...]

    def __init__(self, orders=()):
        orders = tuple(sorted((k for k in orders if k != 0), reverse=True))
        if any(k < 0 for k in orders):
            raise ValueError(f"negative cone order in {orders}")
        object.__setattr__(self, "orders", orders)

    @property
    def genus(self) -> int:
        total = sum(self.orders)
        if total % 2:
            raise ValueError(f"order sum {total} is odd")
        return 1 + total // 2

    def __str__(self) -> str:
        if not self.orders:
            return "H(0)"
        return "H(" + ",".join(map(str, self.orders)) + ")"

    @staticmethod
    def parse(text: str) -> "Stratum":
        text = text.strip()
        if not (text.startswith("H(") and text.endswith(")")):
            raise ValueError(f"not a stratum: {text!r}")
        body = text[2:-1]
        return Stratum(tuple(int(t) for t in body.split(",")) if body else ())


@dataclass(frozen=True)
class Origami:
    h: Permutation
    v: Permutation

    def __post_init__(self):
        if self.h.degree != self.v.degree:
            raise ValueError(
                f"degree mismatch: h has {self.h.degree} squares, v has {self.v.degree}"
            )
        if not is_transitive([self.h, self.v]):
            raise ValueError("(h, v) does not act transitively: the surface is disconnected")

    @property
    def n(self) -> int:
        return self.h.degree

    @cached_property
    def commutator(self) -> Permutation:
        return compose(self.h, compose(self.v, compose(self.h.inverse(), self.v.inverse())))

    @cached_property
    def square_vertex(self) -> tuple[int, ...]:
        """square_vertex[s-1] = index into vertex_cycles(self) of the cycle
        owning the bottom-left corner of s."""
        owner = [0] * self.n
        for idx, c in enumerate(vertex_cycles(self)):
            for s in c:
                owner[s - 1] = idx
        return tuple(owner)

    def to_text(self) -> str:
        return f"{self.n}; h={self.h}; v={self.v}"

    def __str__(self) -> str:
        return self.to_text()


def new_origami(h: Permutation, v: Permutation) -> Origami:
    return Origami(h, v)


def parse_origami(text: str) -> Origami:
    parts = [p.strip() for p in text.split(";")]
    if len(parts) != 3:
        raise ValueError(f"expected 'n; h=...; v=...', got {text!r}")
    try:
        n = int(parts[0])
    except ValueError:
        raise ValueError(f"bad square count {parts[0]!r}") from None
    perms = {}
    for part in parts[1:]:
        if "=" not in part:
            raise ValueError(f"missing '=' in {part!r}")
        name, val = (t.strip() for t in part.split("=", 1))
        if name not in ("h", "v"):
            raise ValueError(f"unknown field {name!r}, expected h or v")
        perms[name] = Permutation.parse(val, n)
    if set(perms) != {"h", "v"}:
        raise ValueError("need both h= and v=")
    return Origami(perms["h"], perms["v"])


# -- fixtures ------------------------------------------------------------------


def torus() -> Origami:
    return Origami(Permutation.identity(1), Permutation.identity(1))


def st3() -> Origami:
    return Origami(Permutation.from_cycles([(1, 2)], 3), Permutation.from_cycles([(1, 3)], 3))


def st4() -> Origami:
    return Origami(
        Permutation.from_cycles([(1, 2), (3, 4)], 4),
        Permutation.from_cycles([(1, 2, 3, 4)], 4),
    )


# -- invariants ------------------------------------------------------------------


def vertex_cycles(o: Origami) -> list[tuple[int, ...]]:
    """Cycles of the commutator; one cycle of length ℓ per vertex, angle 2πℓ."""
    return cycles(o.commutator)


def genus(o: Origami) -> int:
    V = len(vertex_cycles(o))
    assert (o.n - V) % 2 == 0, "n - V must be even"
    return 1 + (o.n - V) // 2


def genus_from_euler(o: Origami) -> int:
    """Same genus through the cell structure: V - E + F with E = 2n, F = n.

    Edge count: every edge of the square complex is the bottom or the left
    edge of exactly one square (tops and rights are re-identifications), so
    counting the distinct identified pairs gives 2n.
    """
    edges = {("b", s) for s in range(1, o.n + 1)} | {("l", s) for s in range(1, o.n + 1)}
    E = len(edges)
    chi = len(vertex_cycles(o)) - E + o.n
    assert chi % 2 == 0
    return 1 - chi // 2


def stratum(o: Origami) -> Stratum:
    orders = [len(c) - 1 for c in vertex_cycles(o) if len(c) > 1]
    s = Stratum(orders)
    assert sum(s.orders) == 2 * genus(o) - 2
    return s


def stratum_dim_abelian(orders, g: int) -> int:
    """Complex dimension 2g + n - 1 of an abelian stratum, with H(0) counted
    as one marked regular point (n = 1)."""
    orders = [k for k in orders if k != 0]
    n = len(orders) if orders else 1
    if sum(orders) != 2 * g - 2:
        raise ValueError(f"orders {orders} do not sum to 2g-2 = {2 * g - 2}")
    return 2 * g + n - 1


def stratum_dim_quadratic(orders, g: int) -> int:
    """Complex dimension 2g + n - 2 of a stratum of non-square quadratic
    differentials (one parameter less: some side pair is glued with a
    half-turn, and is then determined by the others)."""
    orders = list(orders)
    n = len(orders) if orders else 1
    if sum(orders) != 4 * g - 4:
        raise ValueError(f"orders {orders} do not sum to 4g-4 = {4 * g - 4}")
    return 2 * g + n - 2


# -- canonical form --------------------------------------------------------------


def _canonical_key(h_img: tuple[int, ...], v_img: tuple[int, ...]) -> tuple:
    """Lexicographically least relabeled (h, v) over all BFS roots.

    BFS from each square over the moves (h, h⁻¹, v, v⁻¹), relabeling squares
    in discovery order, makes the relabeling canonical given the root; taking
    the minimum over roots kills the root choice. Equality of keys is exactly
    simultaneous-conjugation equivalence.
    """
    n = len(h_img)
    hinv = [0] * (n + 1)
    vinv = [0] * (n + 1)
    for i, j in enumerate(h_img, start=1):
        hinv[j] = i
    for i, j in enumerate(v_img, start=1):
        vinv[j] = i
    best = None
    for root in range(1, n + 1):
        label = {root: 1}
        order = [root]
        qi = 0
        while qi < len(order):
            s = order[qi]
            qi += 1
            for nb in (h_img[s - 1], hinv[s], v_img[s - 1], vinv[s]):
                if nb not in label:
                    label[nb] = len(order) + 1
                    order.append(nb)
        key = (
            tuple(label[h_img[s - 1]] for s in order),
            tuple(label[v_img[s - 1]] for s in order),
        )
        if best is None or key < best:
            best = key
    return best


def canonical_form(o: Origami) -> Origami:
    h_one, v_one = _canonical_key(o.h.images, o.v.images)
    return Origami(Permutation(h_one), Permutation(v_one))


def same_surface(o1: Origami, o2: Origami) -> bool:
    """Equality up to simultaneous relabeling of the squares."""
    return _canonical_key(o1.h.images, o1.v.images) == _canonical_key(o2.h.images, o2.v.images)


def relabel(o: Origami, g: Permutation) -> Origami:
    return Origami(conjugate(o.h, g), conjugate(o.v, g))


# -- period lattice ---------------------------------------------------------------


def period_lattice(o: Origami) -> list[tuple[int, int]]:
    """Hermite basis of the absolute period lattice inside ℤ².

    The 1-skeleton of the square complex has the vertex cycles as nodes; each
    square contributes its bottom edge (holonomy (1,0), from the corner of s
    to the corner of h(s)) and its left edge (holonomy (0,1), from the corner
    of s to the corner of v(s)). Fundamental cycles of a spanning tree
    surject onto H₁ of the surface, so their holonomies generate the lattice.
    """
    owner = o.square_vertex
    nverts = len(vertex_cycles(o))
    edges = []  # (from_vertex, to_vertex, (dx, dy))
    for s in range(1, o.n + 1):
        edges.append((owner[s - 1], owner[o.h(s) - 1], (1, 0)))
        edges.append((owner[s - 1], owner[o.v(s) - 1], (0, 1)))
    # spanning tree potentials: pot[w] = holonomy of the tree path root -> w
    pot: dict[int, tuple[int, int]] = {0: (0, 0)}
    in_tree = [False] * len(edges)
    grew = True
    while grew:
        grew = False
        for i, (a, b, (dx, dy)) in enumerate(edges):
            if a in pot and b not in pot:
                pot[b] = (pot[a][0] + dx, pot[a][1] + dy)
                in_tree[i] = True
                grew = True
            elif b in pot and a not in pot:
                pot[a] = (pot[b][0] - dx, pot[b][1] - dy)
                in_tree[i] = True
                grew = True
    assert len(pot) == nverts, "surface is connected, so the tree spans"
    gens = []
    for i, (a, b, (dx, dy)) in enumerate(edges):
        if not in_tree[i]:
            gens.append((dx + pot[a][0] - pot[b][0], dy + pot[a][1] - pot[b][1]))
    return [(r[0], r[1]) for r in hermite_form(gens)]


def is_reduced(o: Origami) -> bool:
    """Whether the absolute period lattice is all of ℤ² (primitivity)."""
    return is_standard_lattice(period_lattice(o), 2)


# -- random surfaces (for experiments and property tests) -------------------------


def random_origami(n: int, rng: random.Random | None = None) -> Origami:
    rng = rng or random.Random()
    while True:
        h = list(range(1, n + 1))
        v = list(range(1, n + 1))
        rng.shuffle(h)
        rng.shuffle(v)
        hp, vp = Permutation(tuple(h)), Permutation(tuple(v))
        if is_transitive([hp, vp]):
            return Origami(hp, vp)
