"""Multigraded Betti numbers and the linear part of the minimal free
resolution of a Stanley-Reisner ring, built from restriction maps on the
cohomology of induced subcomplexes.

Summands are indexed by ``(i, U)`` with cohomological degree
``j = #U - i - 1``.  A block from ``(i, U)`` to ``(i-1, U - u)`` is the
restriction map H̃^j(Δ_U) -> H̃^j(Δ_{U-u}) times (-1)^alpha(u, U), with the
variable x_u kept as bookkeeping only.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations

import numpy as np

from . import linalg
from ._parallel import pmap
from .cohomology import cohomology, cohomology_dim, cochain_differential, faces_in, restriction_on_cohomology
from .linalg import as_field
from .simplicial import (
    MonomialIdeal,
    SimplicialComplex,
    alpha,
    all_masks,
    complex_from_ideal,
    label,
    members,
    polarize,
    sign,
    size,
    sort_key,
)


def bit(u: int) -> int:
    return 1 << (u - 1)


# ---------------------------------------------------------------------------
# Betti numbers


@dataclass(frozen=True)
class BettiTable:
    n: int
    p: int
    entries: dict  # (i, U) -> beta, nonzero only

    def __getitem__(self, key) -> int:
        return self.entries.get(key, 0)

    def coarse(self) -> dict:
        """(i, #U) -> sum of beta_{i,U}."""
        out: dict = defaultdict(int)
        for (i, U), b in self.entries.items():
            out[(i, size(U))] += b
        return dict(sorted(out.items()))

    def ranks(self) -> list[int]:
        top = max((i for i, _ in self.entries), default=-1)
        return [sum(b for (k, _), b in self.entries.items() if k == i) for i in range(top + 1)]

    def degrees(self, i: int) -> list[int]:
        return sorted((U for (k, U) in self.entries if k == i), key=sort_key)

    def to_json(self) -> dict:
        return {
            "ranks": self.ranks(),
            "entries": [
                {"i": i, "U": list(members(U)), "beta": b}
                for (i, U), b in sorted(self.entries.items(), key=lambda kv: (kv[0][0], sort_key(kv[0][1])))
            ],
            "coarse": [{"i": i, "degree": d, "beta": b} for (i, d), b in self.coarse().items()],
        }


def _betti_at(D: SimplicialComplex, p: int, U: int) -> list[tuple[int, int, int]]:
    out = []
    for i in range(size(U) + 1):
        b = cohomology_dim(D, U, size(U) - i - 1, p)
        if b:
            out.append((i, U, b))
    return out


def betti_table(D: SimplicialComplex, field=linalg.DEFAULT_PRIME, jobs: int = 1) -> BettiTable:
    """beta_{i,U}(k[Δ]) = dim H̃^{#U-i-1}(Δ_U) over all squarefree U."""
    if D.is_void:
        raise ValueError("the void complex has no Stanley-Reisner ring")
    p = as_field(field).p
    entries = {}
    for chunk in pmap(partial(_betti_at, D, p), all_masks(D.n), jobs):
        for i, U, b in chunk:
            entries[(i, U)] = b
    return BettiTable(D.n, p, entries)


# ---------------------------------------------------------------------------
# the linear part


@dataclass(frozen=True)
class Summand:
    i: int
    U: int
    j: int
    dim: int

    @property
    def key(self) -> tuple[int, int]:
        return (self.i, self.U)

    @property
    def strand(self) -> int:
        return strand_index(self.i, self.U)

    def node_id(self) -> str:
        return f"{self.i}_{label(self.U)}"


@dataclass(frozen=True)
class Block:
    source: tuple[int, int]
    target: tuple[int, int]
    u: int  # multiplier variable x_u
    matrix: np.ndarray

    @property
    def nonzero(self) -> bool:
        return bool(self.matrix.any())


def strand_index(i: int, U: int) -> int:
    """Strand of the summand (i, U): #U - i + 1, the generator degree minus
    homological degree in the resolution of the ideal (which sits in
    homological degree i - 1).  The augmentation summand (0, ∅) is strand 0."""
    if i == 0:
        return 0
    return size(U) - i + 1


@dataclass
class LinearPartComplex:
    n: int
    p: int
    summands: list  # of Summand
    blocks: dict = field(default_factory=dict)  # (i, U, u) -> Block

    def summand(self, i: int, U: int) -> Summand | None:
        return self._by_key.get((i, U))

    def __post_init__(self):
        self._by_key = {s.key: s for s in self.summands}

    def nonzero_blocks(self) -> list[Block]:
        return [b for b in self.blocks.values() if b.nonzero]

    def arrows(self) -> set[tuple[int, int]]:
        """(source U, target U) for every nonzero block."""
        return {(b.source[1], b.target[1]) for b in self.nonzero_blocks()}

    def composite_failures(self) -> list[tuple[int, int, int, int]]:
        """(i, U, u, v) where the two paths U -> U-u-v do not cancel."""
        F = self.p
        bad = []
        for s in self.summands:
            if s.i < 2:
                continue
            for u, v in combinations(members(s.U), 2):
                W = s.U & ~bit(u) & ~bit(v)
                tgt = self.summand(s.i - 2, W)
                if tgt is None:
                    continue
                total = np.zeros((tgt.dim, s.dim), dtype=np.int64)
                for first, second in ((u, v), (v, u)):
                    b1 = self.blocks.get((s.i, s.U, first))
                    b2 = self.blocks.get((s.i - 1, s.U & ~bit(first), second))
                    if b1 is not None and b2 is not None:
                        total = (total + linalg.matmul(b2.matrix, b1.matrix, F)) % F
                if total.any():
                    bad.append((s.i, s.U, u, v))
        return bad

    def to_dot(self) -> str:
        lines = ["digraph linear_part {", "  rankdir=RL;"]
        for s in sorted(self.summands, key=lambda s: (s.i, sort_key(s.U))):
            lines.append(f'  "{s.node_id()}" [label="({s.i},{label(s.U)},{s.j},{s.dim})"];')
        for (i, U, u), b in sorted(self.blocks.items(), key=lambda kv: (kv[0][0], sort_key(kv[0][1]), kv[0][2])):
            if b.nonzero:
                src = self._by_key[b.source].node_id()
                tgt = self._by_key[b.target].node_id()
                lines.append(f'  "{src}" -> "{tgt}" [label="x{u}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "summands": [
                {"i": s.i, "U": list(members(s.U)), "j": s.j, "dim": s.dim}
                for s in sorted(self.summands, key=lambda s: (s.i, sort_key(s.U)))
            ],
            "blocks": [
                {
                    "source": {"i": i, "U": list(members(U))},
                    "target": {"i": i - 1, "U": list(members(b.target[1]))},
                    "u": u,
                    "matrix": [[linalg.GF(self.p).symmetric(x) for x in row] for row in b.matrix.tolist()],
                }
                for (i, U, u), b in sorted(self.blocks.items(), key=lambda kv: (kv[0][0], sort_key(kv[0][1]), kv[0][2]))
                if b.nonzero
            ],
        }


def build_linear_part(D: SimplicialComplex, field=linalg.DEFAULT_PRIME, jobs: int = 1) -> LinearPartComplex:
    """Assemble the linear part from restriction maps; checks d∘d = 0."""
    F = as_field(field)
    table = betti_table(D, F, jobs)
    summands = [
        Summand(i, U, size(U) - i - 1, b)
        for (i, U), b in sorted(table.entries.items(), key=lambda kv: (kv[0][0], sort_key(kv[0][1])))
    ]
    keys = {s.key for s in summands}
    blocks = {}
    for s in summands:
        for u in members(s.U):
            tgt = (s.i - 1, s.U & ~bit(u))
            if tgt not in keys:
                continue
            rho = restriction_on_cohomology(D, s.U, u, s.j, F)
            blocks[(s.i, s.U, u)] = Block(s.key, tgt, u, (sign(u, s.U) * rho) % F.p)
    LP = LinearPartComplex(D.n, F.p, summands, blocks)
    bad = LP.composite_failures()
    if bad:
        raise AssertionError(f"linear part is not a complex at {bad[:5]}")
    return LP


@dataclass(frozen=True)
class StrandView:
    k: int
    summands: list
    blocks: list


def strand(LP: LinearPartComplex, k: int) -> StrandView:
    """The k-linear strand: summands with strand_index == k, and the blocks
    between them."""
    chosen = [s for s in LP.summands if s.strand == k]
    keys = {s.key for s in chosen}
    blocks = [b for b in LP.blocks.values() if b.source in keys and b.target in keys]
    return StrandView(k, chosen, blocks)


# ---------------------------------------------------------------------------
# Koszul slices


@dataclass(frozen=True)
class KoszulSlice:
    U: int
    intertwines: bool
    homology: dict  # homological degree a -> dim
    cohomology: dict  # a -> dim H̃^{#U-1-a}(Δ_U)

    @property
    def ok(self) -> bool:
        return self.intertwines and self.homology == self.cohomology


def koszul_differential(D: SimplicialComplex, U: int, a: int, field=linalg.DEFAULT_PRIME) -> np.ndarray:
    """Degree-U part of the Koszul differential of k[Δ] from homological
    degree a to a-1.  Basis of degree a: x^F ⊗ e_{U-F} with F a face,
    #F = #U - a, ordered like the faces of Δ_U."""
    F_ = as_field(field)
    c = size(U)
    src = faces_in(D, U, c - a - 1)
    tgt = faces_in(D, U, c - a)
    row = {G: r for r, G in enumerate(tgt)}
    M = np.zeros((len(tgt), len(src)), dtype=np.int64)
    for col, Fc in enumerate(src):
        rest = U & ~Fc
        for i in members(rest):
            r = row.get(Fc | bit(i))
            if r is not None:
                M[r, col] = sign(i, rest) % F_.p
    return M


def koszul_slice(D: SimplicialComplex, U: int, field=linalg.DEFAULT_PRIME) -> KoszulSlice:
    F = as_field(field)
    c = size(U)
    ok = True
    hom, coh = {}, {}
    for a in range(c + 1):
        src = faces_in(D, U, c - a - 1)
        phi_src = np.diag([(-1) ** alpha(Fc, U) % F.p for Fc in src]).astype(np.int64).reshape(len(src), len(src))
        if a >= 1:
            tgt = faces_in(D, U, c - a)
            phi_tgt = np.diag([(-1) ** alpha(G, U) % F.p for G in tgt]).astype(np.int64).reshape(len(tgt), len(tgt))
            K = koszul_differential(D, U, a, F)
            delta = cochain_differential(D, U, c - a - 1, F)
            lhs = linalg.matmul(delta, phi_src, F)
            rhs = linalg.matmul(phi_tgt, K, F)
            ok &= bool(np.array_equal(lhs, rhs))
        K_out = koszul_differential(D, U, a, F) if a >= 1 else np.zeros((0, len(src)), dtype=np.int64)
        K_in = koszul_differential(D, U, a + 1, F) if a + 1 <= c else np.zeros((len(src), 0), dtype=np.int64)
        h = len(src) - linalg.rank(K_out, F) - linalg.rank(K_in, F)
        if h:
            hom[a] = h
        d = cohomology_dim(D, U, c - 1 - a, F)
        if d:
            coh[a] = d
    return KoszulSlice(U, ok, hom, coh)


def koszul_slice_check(D: SimplicialComplex, U: int, field=linalg.DEFAULT_PRIME) -> bool:
    """Does x^F ⊗ e_{U-F} -> (-1)^alpha(F,U) F* intertwine the Koszul slice
    with the cochain complex, with matching (co)homology dimensions?"""
    return koszul_slice(D, U, field).ok


# ---------------------------------------------------------------------------
# the 2-linear strand in indicator bases


def components(D: SimplicialComplex, U: int) -> list[int]:
    """Connected components of Δ_U as vertex masks.  The one containing the
    smallest vertex comes first; the rest are ordered by smallest vertex."""
    verts = [v for v in members(U) if D.is_face(bit(v))]
    adj = {v: 0 for v in verts}
    for E in faces_in(D, U, 1):
        a, b = members(E)
        adj[a] |= bit(b)
        adj[b] |= bit(a)
    seen = 0
    comps = []
    for v in verts:
        if seen & bit(v):
            continue
        comp = frontier = bit(v)
        while frontier:
            nxt = 0
            for w in members(frontier):
                nxt |= adj[w]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(comp)
    return comps


def indicator_restriction(src_comps: list[int], tgt_comps: list[int], u: int) -> np.ndarray:
    """Integer matrix of ω -> ω| on H̃^0 in the indicator bases e_{·,i}, i >= 1.

    The indicator of C minus u is a union of target components; the
    distinguished target component is congruent to minus the sum of the
    others modulo constants.
    """
    M = np.zeros((len(tgt_comps) - 1, len(src_comps) - 1), dtype=np.int64)
    for c, C in enumerate(src_comps[1:]):
        rest = C & ~bit(u)
        covered = [bool(Dj & ~rest == 0) and Dj != 0 for Dj in tgt_comps]
        shift = -1 if covered[0] else 0
        for r in range(1, len(tgt_comps)):
            M[r - 1, c] = int(covered[r]) + shift
    return M


@dataclass
class TwoStrandReport:
    p: int
    components: dict  # U -> list of component masks (distinguished first)
    coefficients: dict  # (i, U, u) -> integer matrix in indicator bases
    invertible: bool
    consistent: bool

    @property
    def coefficient_set(self) -> set[int]:
        out: set[int] = set()
        for M in self.coefficients.values():
            out.update(int(x) for x in np.unique(M))
        return out

    @property
    def unit_coefficients(self) -> bool:
        return self.coefficient_set <= {-1, 0, 1}

    def to_json(self) -> dict:
        return {
            "components": [
                {"U": list(members(U)), "components": [list(members(C)) for C in comps]}
                for U, comps in sorted(self.components.items(), key=lambda kv: sort_key(kv[0]))
            ],
            "blocks": [
                {"i": i, "U": list(members(U)), "u": u, "matrix": M.tolist()}
                for (i, U, u), M in sorted(self.coefficients.items(), key=lambda kv: (kv[0][0], sort_key(kv[0][1]), kv[0][2]))
            ],
            "coefficients": sorted(self.coefficient_set),
            "invertible": self.invertible,
            "consistent": self.consistent,
        }


def _indicator_change_of_basis(D: SimplicialComplex, U: int, comps: list[int], F) -> np.ndarray:
    """Columns: class coordinates of e_{U,i} (i >= 1) in the cohomology reps basis."""
    H = cohomology(D, U, 0, F)
    T = np.zeros((H.dim, len(comps) - 1), dtype=np.int64)
    for c, C in enumerate(comps[1:]):
        e = np.array([1 if C & V else 0 for V in H.faces], dtype=np.int64)
        T[:, c] = H.coordinates(e)
    return T


def two_linear_strand_basis(D, field=linalg.DEFAULT_PRIME) -> TwoStrandReport:
    """Rewrite the 2-linear strand (j = 0 summands) in indicator bases of
    H̃^0 and check that every coefficient lies in {-1, 0, 1}.

    Accepts a complex or a monomial ideal; non-squarefree ideals are
    polarized first.
    """
    F = as_field(field)
    if isinstance(D, MonomialIdeal):
        I = D if D.squarefree else polarize(D)[0]
        D = complex_from_ideal(I)
    comps_of: dict[int, list[int]] = {}
    T_of: dict[int, np.ndarray] = {}
    invertible = True
    for U in all_masks(D.n):
        if size(U) < 2 or cohomology_dim(D, U, 0, F) == 0:
            continue
        comps = components(D, U)
        assert len(comps) - 1 == cohomology_dim(D, U, 0, F)
        comps_of[U] = comps
        T = _indicator_change_of_basis(D, U, comps, F)
        T_of[U] = T
        invertible &= linalg.rank(T, F) == T.shape[0] == T.shape[1]
    coeffs = {}
    consistent = True
    for U, comps in comps_of.items():
        i = size(U) - 1
        for u in members(U):
            W = U & ~bit(u)
            if W not in comps_of:
                continue
            M = sign(u, U) * indicator_restriction(comps, comps_of[W], u)
            coeffs[(i, U, u)] = M
            # T_W · M == sign · rho · T_U
            rho = restriction_on_cohomology(D, U, u, 0, F)
            lhs = linalg.matmul(T_of[W], M % F.p, F)
            rhs = linalg.matmul((sign(u, U) * rho) % F.p, T_of[U], F)
            consistent &= bool(np.array_equal(lhs, rhs))
    report = TwoStrandReport(F.p, comps_of, coeffs, invertible, consistent)
    if not report.unit_coefficients:
        raise AssertionError(f"2-linear strand has coefficients {sorted(report.coefficient_set)}")
    if not (invertible and consistent):
        raise AssertionError("indicator basis change failed (invertible=%s, consistent=%s)" % (invertible, consistent))
    return report
