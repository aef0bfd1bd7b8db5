"""Simplicial complexes, squarefree monomial ideals and the dictionary
between them.

Vertex sets are ints used as bitmasks: vertex ``v`` (1-based) is bit
``v - 1``.  All enumerations use the order (cardinality, bitmask).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_VERTICES = 20


# ---------------------------------------------------------------------------
# vertex sets


def vset(vertices: Iterable[int] = ()) -> int:
    """Bitmask of a collection of 1-based vertex labels."""
    m = 0
    for v in vertices:
        if v < 1:
            raise ValueError(f"vertex labels start at 1, got {v}")
        m |= 1 << (v - 1)
    return m


def members(mask: int) -> tuple[int, ...]:
    """Vertices of ``mask`` in ascending order."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def size(mask: int) -> int:
    return bin(mask).count("1")


def label(mask: int) -> str:
    """Concatenated vertex labels, e.g. ``{1,2,3} -> "123"``; the empty set
    is rendered as ``"0"``.  Labels above 9 are comma separated."""
    vs = members(mask)
    if not vs:
        return "0"
    if vs[-1] > 9:
        return ",".join(map(str, vs))
    return "".join(map(str, vs))


def sort_key(mask: int) -> tuple[int, int]:
    return (size(mask), mask)


def subsets(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` (in increasing integer order)."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def all_masks(n: int) -> list[int]:
    return sorted(range(1 << n), key=sort_key)


def alpha(A: int, B: int) -> int:
    """#{(a, b) : a in A, b in B, a > b}."""
    total = 0
    for a in members(A):
        total += size(B & ((1 << (a - 1)) - 1))
    return total


def sign(u: int, U: int) -> int:
    """(-1)^alpha(u, U) for a single vertex u."""
    return -1 if size(U & ((1 << (u - 1)) - 1)) % 2 else 1


def _check_n(n: int) -> None:
    if not 0 <= n <= MAX_VERTICES:
        raise ValueError(f"vertex count must lie in 0..{MAX_VERTICES}, got {n}")


def _antichain(sets: Iterable[int]) -> tuple[int, ...]:
    uniq = sorted(set(sets), key=lambda m: (-size(m), m))
    kept: list[int] = []
    for m in uniq:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=sort_key))


# ---------------------------------------------------------------------------
# complexes


@dataclass(frozen=True)
class SimplicialComplex:
    """A simplicial complex on the vertex set [n], stored by its facets.

    ``facets == ()`` is the void complex (no faces at all) and
    ``facets == (0,)`` is the irrelevant complex {∅}.
    """

    n: int
    facets: tuple[int, ...]

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == (0,)

    @cached_property
    def face_set(self) -> frozenset[int]:
        faces: set[int] = set()
        for f in self.facets:
            faces.update(subsets(f))
        return frozenset(faces)

    @cached_property
    def faces(self) -> tuple[int, ...]:
        return tuple(sorted(self.face_set, key=sort_key))

    @property
    def dim(self) -> int:
        if self.is_void:
            return -2  # no faces at all
        return max(size(f) for f in self.facets) - 1

    @property
    def vertex_mask(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    def is_face(self, F: int) -> bool:
        return F in self.face_set

    def faces_of_dim(self, d: int, within: int | None = None) -> list[int]:
        """Faces with d+1 vertices, optionally only those inside ``within``."""
        return [
            F for F in self.faces
            if size(F) == d + 1 and (within is None or F & ~within == 0)
        ]

    def induced(self, U: int) -> "SimplicialComplex":
        if self.is_void:
            return self
        return SimplicialComplex(self.n, _antichain(f & U for f in self.facets))

    def relabel(self, perm: Sequence[int]) -> "SimplicialComplex":
        """Apply the vertex map ``v -> perm[v-1]``."""
        return SimplicialComplex(
            self.n, _antichain(vset(perm[v - 1] for v in members(f)) for f in self.facets)
        )

    def __str__(self) -> str:
        return f"Δ(n={self.n}, facets=[{', '.join(label(f) for f in self.facets)}])"


def complex_from_facets(n: int, facets: Iterable[Iterable[int] | int], empty_face: bool = False) -> SimplicialComplex:
    """Complex generated by ``facets`` (vertex lists or bitmasks).

    Non-maximal generators are dropped.  With no facets, ``empty_face``
    selects {∅} instead of the void complex.
    """
    _check_n(n)
    full = (1 << n) - 1
    masks = []
    for f in facets:
        m = f if isinstance(f, (int, np.integer)) else vset(f)
        m = int(m)
        if m & ~full:
            raise ValueError(f"facet {members(m)} has a vertex outside 1..{n}")
        masks.append(m)
    if not masks and empty_face:
        masks = [0]
    return SimplicialComplex(n, _antichain(masks))


def simplex(n: int) -> SimplicialComplex:
    return complex_from_facets(n, [(1 << n) - 1])


def _face_indicator(n: int, facets: Sequence[int]) -> np.ndarray:
    masks = np.arange(1 << n, dtype=np.int64)
    face = np.zeros(1 << n, dtype=bool)
    for f in facets:
        face |= (masks & ~np.int64(f)) == 0
    return face


# ---------------------------------------------------------------------------
# monomial ideals


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal in n variables given by minimal exponent vectors."""

    n: int
    generators: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for g in self.generators:
            if len(g) != self.n or any(e < 0 for e in g):
                raise ValueError(f"bad exponent vector {g} for n={self.n}")

    @property
    def squarefree(self) -> bool:
        return all(e <= 1 for g in self.generators for e in g)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def supports(self) -> list[int]:
        return [vset(i + 1 for i, e in enumerate(g) if e) for g in self.generators]

    def __str__(self) -> str:
        def mono(g):
            parts = []
            for i, e in enumerate(g):
                if e == 1:
                    parts.append(f"x{i + 1}")
                elif e > 1:
                    parts.append(f"x{i + 1}^{e}")
            return "*".join(parts) or "1"

        return "<" + ", ".join(mono(g) for g in self.generators) + ">"


def _divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_ideal(n: int, generators: Iterable[Sequence[int]]) -> MonomialIdeal:
    """Ideal generated by exponent vectors, reduced to its minimal generators."""
    gens = sorted({tuple(int(e) for e in g) for g in generators}, key=lambda g: (sum(g), g[::-1]))
    minimal: list[tuple[int, ...]] = []
    for g in gens:
        if len(g) != n:
            raise ValueError(f"exponent vector {g} does not have length {n}")
        if not any(_divides(h, g) for h in minimal):
            minimal.append(g)
    return MonomialIdeal(n, tuple(minimal))


def squarefree_ideal(n: int, supports: Iterable[int]) -> MonomialIdeal:
    return monomial_ideal(n, [tuple(1 if m >> i & 1 else 0 for i in range(n)) for m in supports])


def complex_from_ideal(I: MonomialIdeal) -> SimplicialComplex:
    """The complex whose Stanley-Reisner ideal is ``I``."""
    if not I.squarefree:
        raise ValueError("ideal is not squarefree; polarize it first")
    n = I.n
    _check_n(n)
    gens = I.supports()
    if 0 in gens:
        raise ValueError("the unit ideal has no Stanley-Reisner complex")
    masks = np.arange(1 << n, dtype=np.int64)
    face = np.ones(1 << n, dtype=bool)
    for g in gens:
        face &= (masks & g) != g
    maximal = face.copy()
    for v in range(n):
        bit = np.int64(1 << v)
        lacking = (masks & bit) == 0
        maximal[lacking] &= ~face[masks[lacking] | bit]
    return SimplicialComplex(n, tuple(sorted((int(m) for m in np.flatnonzero(maximal)), key=sort_key)))


def minimal_nonfaces(D: SimplicialComplex) -> list[int]:
    if D.is_void:
        raise ValueError("the void complex has no Stanley-Reisner ideal")
    n = D.n
    face = _face_indicator(n, D.facets)
    masks = np.arange(1 << n, dtype=np.int64)
    minimal = ~face
    for v in range(n):
        bit = np.int64(1 << v)
        having = (masks & bit) != 0
        minimal[having] &= face[masks[having] ^ bit]
    return sorted((int(m) for m in np.flatnonzero(minimal)), key=sort_key)


def ideal_from_complex(D: SimplicialComplex) -> MonomialIdeal:
    """Stanley-Reisner ideal: generated by the minimal nonfaces."""
    return squarefree_ideal(D.n, minimal_nonfaces(D))


def polarize(I: MonomialIdeal) -> tuple[MonomialIdeal, list[tuple[int, int]]]:
    """Standard polarization x_i^k -> x_{i,1} ... x_{i,k}.

    Returns the squarefree ideal and, for each new variable (in order), the
    pair ``(original variable, slot)``, both 1-based.  Variable i gets
    max(1, largest exponent of x_i) slots, so squarefree input maps to
    itself under the identity.
    """
    slots = [max([1] + [g[i] for g in I.generators]) for i in range(I.n)]
    names = [(i + 1, s + 1) for i in range(I.n) for s in range(slots[i])]
    offset = np.concatenate([[0], np.cumsum(slots)]).astype(int)
    N = len(names)
    gens = []
    for g in I.generators:
        e = [0] * N
        for i, k in enumerate(g):
            for s in range(k):
                e[offset[i] + s] = 1
        gens.append(tuple(e))
    return monomial_ideal(N, gens), names


# ---------------------------------------------------------------------------
# boundary incidences


def boundary_matrix_support(D: SimplicialComplex, d: int):
    """Faces of dimension d and d-1 and the signed incidences between them.

    Returns ``(faces_d, faces_d_minus_1, [(F, G, sign), ...])`` where
    G = F minus i carries sign (-1)^alpha(i, F).
    """
    top = D.faces_of_dim(d)
    low = D.faces_of_dim(d - 1)
    incidences = []
    for F in top:
        for i in members(F):
            incidences.append((F, F & ~(1 << (i - 1)), sign(i, F)))
    return top, low, incidences


# ---------------------------------------------------------------------------
# graphs


def _graph_adjacency(D: SimplicialComplex) -> list[int]:
    if D.dim > 1:
        raise ValueError(f"expected a graph (dimension <= 1), got dimension {D.dim}")
    adj = [0] * (D.n + 1)
    for F in D.faces_of_dim(1):
        a, b = members(F)
        adj[a] |= 1 << (b - 1)
        adj[b] |= 1 << (a - 1)
    return adj


def is_induced_cycle(adj: Sequence[int], W: int) -> bool:
    """Is the subgraph induced on W a single cycle (of length >= 3)?"""
    vs = members(W)
    if len(vs) < 3 or any(size(adj[v] & W) != 2 for v in vs):
        return False
    # 2-regular: a cycle iff connected
    seen = 1 << (vs[0] - 1)
    frontier = seen
    while frontier:
        nxt = 0
        for v in members(frontier):
            nxt |= adj[v] & W
        frontier = nxt & ~seen
        seen |= nxt
    return seen == W


def max_induced_chordless_cycle(D: SimplicialComplex) -> int | None:
    """Length of the longest induced cycle of length >= 4 in a graph,
    or None when there is none."""
    adj = _graph_adjacency(D)
    n = D.n
    for k in range(n, 3, -1):
        for combo in combinations(range(1, n + 1), k):
            if is_induced_cycle(adj, vset(combo)):
                return k
    return None
