"""Linearity defect of Stanley-Reisner ideals and componentwise linearity.

A class ω ∈ H̃^j(Δ_U) whose restrictions to every U - u vanish gives a
generator of the resolution of I_Δ in homological degree i = #U - j - 2
whose differential has no linear entries.  The defect is the largest such i.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import partial

import numpy as np

from . import linalg
from ._parallel import pmap
from .cohomology import (
    Chain,
    boundary_matrix,
    cohomology,
    complete_cycle_decomposition,
    complete_simplices,
    faces_in,
    homology,
    restriction_on_cohomology,
    simplex_boundary,
)
from .linalg import as_field
from .simplicial import SimplicialComplex, all_masks, max_induced_chordless_cycle, members, size, sort_key


def restriction_kernel(D: SimplicialComplex, U: int, j: int, field=linalg.DEFAULT_PRIME) -> np.ndarray:
    """Kernel of H̃^j(Δ_U) -> ⊕_u H̃^j(Δ_{U-u}) as columns in the reps basis."""
    F = as_field(field)
    dim = cohomology(D, U, j, F).dim
    if dim == 0:
        return np.zeros((0, 0), dtype=np.int64)
    blocks = [restriction_on_cohomology(D, U, u, j, F) for u in members(U)]
    stacked = np.concatenate(blocks, axis=0) if blocks else np.zeros((0, dim), dtype=np.int64)
    return linalg.kernel_basis(stacked, F)


def _kernels_at(D: SimplicialComplex, p: int, U: int) -> list:
    out = []
    for j in range(-1, size(U) - 1):
        dim = cohomology(D, U, j, p).dim
        if dim:
            K = restriction_kernel(D, U, j, p)
            out.append((size(U) - j - 2, U, j, dim, K))
    return out


@dataclass
class DefectReport:
    ld_ideal: int
    witness: tuple | None  # (U, j, class coordinates)
    per_position: dict  # (i, U) -> kernel dim, i = homological degree in I_Δ
    p: int = linalg.DEFAULT_PRIME
    zero_ideal: bool = False
    has_variables: bool = False

    def to_json(self) -> dict:
        out = {"ld": self.ld_ideal}
        if self.witness is not None:
            U, j, cls = self.witness
            out["witness"] = {"U": list(members(U)), "j": j, "class": [linalg.GF(self.p).symmetric(c) for c in cls]}
        else:
            out["witness"] = None
        out["positions"] = [
            {"i": i, "U": list(members(U)), "kernel_dim": k}
            for (i, U), k in sorted(self.per_position.items(), key=lambda kv: (kv[0][0], sort_key(kv[0][1])))
        ]
        if self.zero_ideal:
            out["zero_ideal"] = True
        if self.has_variables:
            out["has_variables"] = True
        return out


def is_zero_ideal(D: SimplicialComplex) -> bool:
    return D.facets == ((1 << D.n) - 1,)


def linearity_defect_ideal(D: SimplicialComplex, field=linalg.DEFAULT_PRIME, jobs: int = 1) -> DefectReport:
    """ld(I_Δ): the largest i with a nonzero class in H̃^{#U-i-2}(Δ_U) killed by
    every single-vertex restriction.

    The zero ideal gets ld = 0 with ``zero_ideal`` set.  For ideals
    containing variables ``has_variables`` is set; the defect is still at
    least 0 whenever I_Δ is nonzero.
    """
    F = as_field(field)
    if D.is_void:
        raise ValueError("the void complex has no Stanley-Reisner ideal")
    if is_zero_ideal(D):
        return DefectReport(0, None, {}, F.p, zero_ideal=True)
    full = (1 << D.n) - 1
    has_variables = D.vertex_mask != full
    per_position = {}
    firing = []
    for chunk in pmap(partial(_kernels_at, D, F.p), all_masks(D.n), jobs):
        for i, U, j, dim, K in chunk:
            per_position[(i, U)] = K.shape[1]
            if K.shape[1]:
                firing.append((i, U, j, K))
    ld = max((i for i, *_ in firing), default=0)
    witness = None
    if ld > 0:
        i, U, j, K = min((w for w in firing if w[0] == ld), key=lambda w: (members(w[1]), w[2]))
        witness = (U, j, [int(x) for x in K[:, 0]])
    return DefectReport(ld, witness, per_position, F.p, has_variables=has_variables)


# ---------------------------------------------------------------------------
# componentwise linearity


@dataclass
class CwlReport:
    verdicts: dict  # condition number (1..4) -> bool
    counterexamples: dict = field(default_factory=dict)
    p: int = linalg.DEFAULT_PRIME

    @property
    def componentwise_linear(self) -> bool:
        return self.verdicts[1]

    @property
    def consistent(self) -> bool:
        return len(set(self.verdicts.values())) == 1

    def to_json(self) -> dict:
        return {
            "componentwise_linear": self.componentwise_linear,
            "conditions": {str(k): v for k, v in sorted(self.verdicts.items())},
            "counterexamples": {str(k): v for k, v in sorted(self.counterexamples.items())},
        }


def _chain_json(d: int, faces, vec, p: int) -> dict:
    G = linalg.GF(p)
    return {
        "dim": d,
        "terms": [{"face": list(members(Fc)), "coeff": G.symmetric(c)} for Fc, c in zip(faces, vec) if int(c) % p],
    }


def _condition2(D, F) -> tuple[bool, dict | None]:
    for U in all_masks(D.n):
        for j in range(-1, size(U) - 2):  # #U > j + 2
            K = restriction_kernel(D, U, j, F)
            if K.shape[1]:
                H = cohomology(D, U, j, F)
                cocycle = linalg.matmul(H.reps, K[:, :1], F).reshape(-1)
                return False, {"U": list(members(U)), "j": j, "cocycle": _chain_json(j, H.faces, cocycle, F.p)}
    return True, None


def _complete_span(D, U: int, d: int, F) -> np.ndarray:
    faces = faces_in(D, U, d)
    idx = {G: r for r, G in enumerate(faces)}
    sigmas = complete_simplices(D, U, d)
    G = np.zeros((len(faces), len(sigmas)), dtype=np.int64)
    for c, s in enumerate(sigmas):
        for face, sg in simplex_boundary(s).items():
            G[idx[face], c] = sg % F.p
    return G


def _condition3(D, F) -> tuple[bool, dict | None]:
    """Every class of H̃_d(Δ_U) is a sum of complete cycles on U (U nonempty)."""
    for U in all_masks(D.n):
        if U == 0:
            continue  # the augmentation class of Δ_∅ is not part of I_Δ
        for d in range(-1, size(U) - 1):
            H = homology(D, U, d, F)
            if H.dim == 0:
                continue
            span = _complete_span(D, U, d, F)
            for c in range(H.dim):
                if not linalg.in_span(span, H.reps[:, c], F):
                    return False, {"U": list(members(U)), "i": d, "cycle": _chain_json(d, H.faces, H.reps[:, c], F.p)}
    return True, None


def _condition4(D, F) -> tuple[bool, dict | None]:
    """Every cycle (of dimension >= 0) is a sum of complete cycles on its
    own support; checked on a cycle basis of every Δ_U."""
    for U in all_masks(D.n):
        for d in range(0, size(U) - 1):
            faces = faces_in(D, U, d)
            if not faces:
                continue
            Z = linalg.kernel_basis(boundary_matrix(D, U, d, F), F)
            for c in range(Z.shape[1]):
                z = Chain.from_vector(d, faces, Z[:, c], F.p)
                if complete_cycle_decomposition(z, D, F) is None:
                    return False, {"U": list(members(U)), "i": d, "cycle": _chain_json(d, faces, Z[:, c], F.p)}
    return True, None


def is_componentwise_linear(D: SimplicialComplex, field=linalg.DEFAULT_PRIME, jobs: int = 1) -> CwlReport:
    """Decide componentwise linearity of I_Δ by four equivalent conditions:
    (1) ld = 0, (2) restrictions detect every class with #U > j + 2,
    (3) homology classes are sums of complete cycles, (4) cycles are sums of
    complete cycles on their own support.  Raises if they disagree."""
    F = as_field(field)
    if D.is_void:
        raise ValueError("the void complex has no Stanley-Reisner ideal")
    verdicts, counter = {}, {}
    rep = linearity_defect_ideal(D, F, jobs)
    verdicts[1] = rep.ld_ideal == 0
    if rep.witness is not None:
        U, j, cls = rep.witness
        counter[1] = {"U": list(members(U)), "j": j, "ld": rep.ld_ideal, "class": [linalg.GF(F.p).symmetric(c) for c in cls]}
    for k, check in ((2, _condition2), (3, _condition3), (4, _condition4)):
        ok, cex = check(D, F)
        verdicts[k] = ok
        if cex is not None:
            counter[k] = cex
    report = CwlReport(verdicts, counter, F.p)
    if not report.consistent:
        raise AssertionError(f"componentwise-linearity conditions disagree: {verdicts}")
    return report


def froberg_lindef(D: SimplicialComplex, field=linalg.DEFAULT_PRIME) -> tuple[int, bool]:
    """(longest induced cycle of length >= 4) - 3, or 0 if there is none,
    together with whether it matches ``linearity_defect_ideal``."""
    if D.vertex_mask != (1 << D.n) - 1:
        raise ValueError("every element of [n] must be a vertex")
    L = max_induced_chordless_cycle(D)
    value = 0 if L is None else L - 3
    return value, value == linearity_defect_ideal(D, field).ld_ideal
