"""Brute-force multigraded minimal free resolution of k[Δ] over GF(p).

Syzygies are found degree by degree: in a squarefree degree V the free
module F_i has the k-basis x^{V-U} g for generators g of degree U ⊆ V, so
d_i restricted to degree V is just a scalar submatrix.  New generators of
F_{i+1} at V lift a complement of m·Z (the span of x_v times the kernel in
degree V - v) inside the kernel Z in degree V.

This module deliberately shares nothing with the cohomology code beyond
the linear algebra, so it can be used to cross-check it.
"""
from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass

import numpy as np

from . import linalg
from .linalg import as_field
from .simplicial import SimplicialComplex, all_masks, members, size, sort_key


class ResolutionError(RuntimeError):
    pass


@dataclass(frozen=True)
class Step:
    """Generators of F_i and the scalar part of d_i: F_i -> F_{i-1}.

    Entry (r, c) of ``matrix`` multiplies x^{deg c - deg r}; it is nonzero
    only when deg r ⊆ deg c.
    """

    degrees: tuple[int, ...]
    matrix: np.ndarray


@dataclass(frozen=True)
class FreeResolution:
    n: int
    p: int
    steps: tuple  # of Step
    base: str = "k[Δ]"

    @property
    def ranks(self) -> list[int]:
        return [len(s.degrees) for s in self.steps]

    def betti(self) -> dict:
        out: dict = defaultdict(int)
        for i, s in enumerate(self.steps):
            for U in s.degrees:
                out[(i, U)] += 1
        return dict(out)

    def entries(self, i: int):
        """(row, col, coefficient, exponent tuple) for the nonzero entries of d_i."""
        if i == 0:
            return
        s, prev = self.steps[i], self.steps[i - 1]
        rows, cols = np.nonzero(s.matrix)
        for r, c in sorted(zip(rows.tolist(), cols.tolist()), key=lambda rc: (rc[1], rc[0])):
            mono = s.degrees[c] & ~prev.degrees[r]
            yield r, c, int(s.matrix[r, c]), tuple(1 if mono >> v & 1 else 0 for v in range(self.n))

    def to_json(self) -> dict:
        G = linalg.GF(self.p)
        steps = []
        for i, s in enumerate(self.steps):
            steps.append({
                "degrees": [list(members(U)) for U in s.degrees],
                "entries": [
                    {"row": r, "col": c, "coeff": G.symmetric(x), "mono": list(e)}
                    for r, c, x, e in self.entries(i)
                ],
            })
        return {"base": self.base, "p": self.p, "ranks": self.ranks, "steps": steps}


def _degree_matrix(D: SimplicialComplex, steps: list, i: int, V: int):
    """Columns: generators of F_i inside V; the scalar matrix of d_i in degree V."""
    s = steps[i]
    cols = [g for g, U in enumerate(s.degrees) if U & ~V == 0]
    if i == 0:
        # augmentation F_0 = S -> k[Δ], nonzero in degree V iff V is a face
        A = np.ones((1, len(cols)), dtype=np.int64) if D.is_face(V) else np.zeros((0, len(cols)), dtype=np.int64)
        return cols, A
    prev = steps[i - 1]
    rows = [h for h, W in enumerate(prev.degrees) if W & ~V == 0]
    return cols, s.matrix[np.ix_(rows, cols)]


def _next_step(D: SimplicialComplex, steps: list, i: int, F) -> tuple[Step, dict]:
    s = steps[i]
    kernels: dict[int, tuple[list[int], np.ndarray]] = {}
    new_degrees: list[int] = []
    new_cols: list[np.ndarray] = []
    for V in all_masks(D.n):
        cols, A = _degree_matrix(D, steps, i, V)
        if not cols:
            kernels[V] = (cols, np.zeros((0, 0), dtype=np.int64))
            continue
        Z = linalg.kernel_basis(A, F)
        pos = {g: k for k, g in enumerate(cols)}
        pieces = []
        for v in members(V):
            wcols, Zw = kernels[V & ~(1 << (v - 1))]
            if Zw.shape[1] == 0:
                continue
            E = np.zeros((len(cols), Zw.shape[1]), dtype=np.int64)
            E[[pos[g] for g in wcols]] = Zw
            pieces.append(E)
        mZ = np.concatenate(pieces, axis=1) if pieces else np.zeros((len(cols), 0), dtype=np.int64)
        mZ = linalg.column_basis(mZ, F)
        for k in linalg.extend_basis(mZ, Z, F):
            vec = np.zeros(len(s.degrees), dtype=np.int64)
            vec[cols] = Z[:, k]
            if any(vec[g] for g in cols if s.degrees[g] == V):
                raise ResolutionError(f"unit entry in a syzygy of degree {members(V)}")
            new_degrees.append(V)
            new_cols.append(vec)
        kernels[V] = (cols, Z)
    matrix = np.stack(new_cols, axis=1) if new_cols else np.zeros((len(s.degrees), 0), dtype=np.int64)
    return Step(tuple(new_degrees), matrix), kernels


def minimal_free_resolution(D: SimplicialComplex, field=linalg.DEFAULT_PRIME, max_step: int | None = None) -> FreeResolution:
    """Minimal free resolution of k[Δ]; every step is checked for exactness
    in every squarefree degree."""
    F = as_field(field)
    if D.is_void:
        raise ValueError("the void complex has no Stanley-Reisner ring")
    if max_step is None:
        max_step = D.n
    steps = [Step((0,), np.zeros((0, 1), dtype=np.int64))]
    i = 0
    while True:
        nxt, kernels = _next_step(D, steps, i, F)
        if not nxt.degrees:
            break
        if i + 1 > max_step:
            raise ResolutionError(f"resolution does not terminate within {max_step} steps")
        steps.append(nxt)
        for V, (cols, Z) in kernels.items():
            _, A = _degree_matrix(D, steps, i + 1, V)
            if linalg.rank(A, F) != Z.shape[1]:
                raise ResolutionError(f"not exact at step {i} in degree {members(V)}")
        i += 1
    return FreeResolution(D.n, F.p, tuple(steps))


def check_nonsquarefree_degrees(D: SimplicialComplex, R: FreeResolution) -> bool:
    """No syzygy is missed in degrees V + e_v (v ∈ V): there the kernel
    equals x_v times the kernel in degree V, so nothing new is generated."""
    F = as_field(R.p)
    steps = list(R.steps)
    for i in range(len(steps)):
        for V in all_masks(D.n):
            cols, A = _degree_matrix(D, steps, i, V)
            if not cols:
                continue
            Z = linalg.kernel_basis(A, F)
            image = 0
            if i + 1 < len(steps):
                _, B = _degree_matrix(D, steps, i + 1, V)
                image = linalg.rank(B, F)
            # in degree V + e_v the basis and matrix coincide with degree V,
            # and m·Z contains x_v·Z_V; the image of d_{i+1} must fill Z_V
            if image != Z.shape[1]:
                return False
    return True


def _check_minimal(R: FreeResolution) -> None:
    for i in range(1, len(R.steps)):
        s, prev = R.steps[i], R.steps[i - 1]
        rows, cols = np.nonzero(s.matrix)
        for r, c in zip(rows.tolist(), cols.tolist()):
            if s.degrees[c] == prev.degrees[r]:
                raise ValueError(f"resolution is not minimal: unit entry at step {i} ({r}, {c})")
            if prev.degrees[r] & ~s.degrees[c]:
                raise ValueError(f"entry at step {i} ({r}, {c}) is not multigraded")


def linear_part_of_resolution(R: FreeResolution) -> dict:
    """Linear entries of the differential, grouped as (i, U, u) -> matrix from
    the degree-U generators of F_i to the degree U-u generators of F_{i-1}."""
    _check_minimal(R)
    blocks = {}
    for i in range(1, len(R.steps)):
        s, prev = R.steps[i], R.steps[i - 1]
        by_deg_prev = defaultdict(list)
        for h, W in enumerate(prev.degrees):
            by_deg_prev[W].append(h)
        by_deg = defaultdict(list)
        for g, U in enumerate(s.degrees):
            by_deg[U].append(g)
        for U, gcols in by_deg.items():
            for u in members(U):
                rows = by_deg_prev.get(U & ~(1 << (u - 1)))
                if rows:
                    blocks[(i, U, u)] = s.matrix[np.ix_(rows, gcols)] % R.p
    return blocks


def block_composite_failures(R: FreeResolution, blocks: dict | None = None) -> list:
    """(i, U, u, v) where linear∘linear paths from U to U-u-v do not cancel."""
    if blocks is None:
        blocks = linear_part_of_resolution(R)
    bad = []
    for (i, U, u), B1 in blocks.items():
        for v in members(U):
            if v <= u:
                continue
            total = None
            for a, b in ((u, v), (v, u)):
                first = blocks.get((i, U, a))
                second = blocks.get((i - 1, U & ~(1 << (a - 1)), b))
                if first is None or second is None:
                    continue
                prod = linalg.matmul(second, first, R.p)
                total = prod if total is None else (total + prod) % R.p
            if total is not None and total.any():
                bad.append((i, U, u, v))
    return bad


@dataclass
class NuReport:
    kernels: dict  # (i, U) -> kernel dim of the linear columns, k[Δ] indexing
    ld_module: int
    ld_ideal: int

    def to_json(self) -> dict:
        return {
            "ld_quotient": self.ld_module,
            "ld_ideal": self.ld_ideal,
            "kernels": [
                {"i": i, "U": list(members(U)), "kernel_dim": k}
                for (i, U), k in sorted(self.kernels.items(), key=lambda kv: (kv[0][0], sort_key(kv[0][1])))
            ],
        }


def nu_report(R: FreeResolution) -> NuReport:
    """For each generator degree, the dimension of the space of generator
    combinations whose differential has no linear entries."""
    _check_minimal(R)
    kernels = {(0, 0): 1}  # F_0 has no differential
    for i in range(1, len(R.steps)):
        s, prev = R.steps[i], R.steps[i - 1]
        by_deg = defaultdict(list)
        for g, U in enumerate(s.degrees):
            by_deg[U].append(g)
        for U, gcols in by_deg.items():
            rows = [h for h, W in enumerate(prev.degrees) if W & ~U == 0 and size(U & ~W) == 1]
            block = s.matrix[np.ix_(rows, gcols)]
            kernels[(i, U)] = len(gcols) - linalg.rank(block, R.p)
    firing = [i for (i, _), k in kernels.items() if k]
    ld_module = max(firing, default=0)
    ld_ideal = max((i - 1 for i in firing if i >= 2), default=0)
    return NuReport(kernels, ld_module, ld_ideal)


def strand_coefficient_probe(R: FreeResolution, k: int) -> dict:
    """Coefficients of the differentials of the resolution of I_Δ (steps
    i >= 2 here) on generators with #U - i + 1 <= k, in the computed basis.
    Informational: other bases may do better."""
    G = linalg.GF(R.p)
    counts: Counter = Counter()
    for i in range(2, len(R.steps)):
        s = R.steps[i]
        for c, U in enumerate(s.degrees):
            if size(U) - i + 1 > k:
                continue
            for x in s.matrix[:, c].tolist():
                if x % R.p:
                    counts[G.symmetric(x)] += 1
    return {
        "k": k,
        "coefficients": {str(c): counts[c] for c in sorted(counts)},
        "unit_only": set(counts) <= {-1, 1},
    }


# ---------------------------------------------------------------------------
# cross-validation against the cohomological construction


def cross_validate(D: SimplicialComplex, field=linalg.DEFAULT_PRIME, R: FreeResolution | None = None) -> dict:
    """Compare the oracle with the Hochster / restriction-map side.

    Returns ``{check name: list of mismatches}``; all lists empty means
    full agreement.
    """
    from .defect import linearity_defect_ideal, restriction_kernel
    from .linear_part import betti_table, build_linear_part, koszul_slice_check

    F = as_field(field)
    if R is None:
        R = minimal_free_resolution(D, F)
    out: dict[str, list] = {}

    table = betti_table(D, F)
    ob = R.betti()
    out["betti"] = [k for k in set(ob) | set(table.entries) if ob.get(k, 0) != table[k]]

    nu = nu_report(R)
    out["nu_kernels"] = []
    for (i, U), kdim in nu.kernels.items():
        j = size(U) - i - 1
        if i == 0:
            continue
        rk = restriction_kernel(D, U, j, F).shape[1]
        if rk != kdim:
            out["nu_kernels"].append((i, U, kdim, rk))

    rep = linearity_defect_ideal(D, F)
    out["ld"] = [] if rep.ld_ideal == nu.ld_ideal else [(rep.ld_ideal, nu.ld_ideal)]

    LP = build_linear_part(D, F)
    oblocks = linear_part_of_resolution(R)
    out["block_ranks"] = []
    for s in LP.summands:
        for u in members(s.U):
            a = LP.blocks.get((s.i, s.U, u))
            b = oblocks.get((s.i, s.U, u))
            ra = linalg.rank(a.matrix, F) if a is not None else 0
            rb = linalg.rank(b, F) if b is not None else 0
            if ra != rb:
                out["block_ranks"].append((s.i, s.U, u, ra, rb))
    out["lp_composite"] = LP.composite_failures()
    out["oracle_composite"] = block_composite_failures(R, oblocks)
    out["koszul"] = [U for U in all_masks(D.n) if not koszul_slice_check(D, U, F)]
    return out
