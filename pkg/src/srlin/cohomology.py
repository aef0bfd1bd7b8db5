"""Reduced simplicial (co)homology of induced subcomplexes over GF(p).

Cochains on Δ_U are vectors indexed by the faces of Δ_U of one dimension,
in (cardinality, bitmask) order; ``C^{-1}`` is spanned by the dual of the
empty face whenever Δ_U is not void.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import linalg
from .linalg import GF, as_field
from .simplicial import SimplicialComplex, members, sign, size, subsets


def faces_in(D: SimplicialComplex, U: int, d: int) -> tuple[int, ...]:
    """Faces of Δ_U with d+1 vertices, in canonical order."""
    return _faces_in(D, U, d)


@lru_cache(maxsize=1 << 16)
def _faces_in(D: SimplicialComplex, U: int, d: int) -> tuple[int, ...]:
    if d < -1:
        return ()
    return tuple(F for F in D.faces if size(F) == d + 1 and F & ~U == 0)


def _index(faces) -> dict[int, int]:
    return {F: k for k, F in enumerate(faces)}


def cochain_differential(D: SimplicialComplex, U: int, j: int, field=linalg.DEFAULT_PRIME) -> np.ndarray:
    """Matrix of C^j(Δ_U) -> C^{j+1}(Δ_U), F* -> Σ (-1)^alpha(i,F) (F ∪ i)*."""
    F_ = as_field(field)
    src = faces_in(D, U, j)
    tgt = faces_in(D, U, j + 1)
    row = _index(tgt)
    M = np.zeros((len(tgt), len(src)), dtype=np.int64)
    for c, F in enumerate(src):
        for i in members(U & ~F):
            G = F | (1 << (i - 1))
            r = row.get(G)
            if r is not None:
                M[r, c] = sign(i, F) % F_.p
    return M


def boundary_matrix(D: SimplicialComplex, U: int, d: int, field=linalg.DEFAULT_PRIME) -> np.ndarray:
    """Matrix of C_d(Δ_U) -> C_{d-1}(Δ_U); the transpose of the cochain map."""
    return cochain_differential(D, U, d - 1, field).T.copy()


@dataclass(frozen=True)
class CohomologyBasis:
    """Cocycle representatives of a basis of H̃^j(Δ_U), together with a
    basis of the coboundaries so class coordinates can be read off."""

    U: int
    j: int
    p: int
    faces: tuple[int, ...]
    reps: np.ndarray
    cob_image: np.ndarray

    @property
    def dim(self) -> int:
        return self.reps.shape[1]

    def coordinates(self, cocycle) -> np.ndarray:
        """Class coordinates of a cocycle in the ``reps`` basis."""
        both = np.concatenate([self.reps, self.cob_image], axis=1)
        c = linalg.solve_in_span(both, cocycle, self.p)
        if c is None:
            raise AssertionError(f"vector is not a cocycle of Δ_{members(self.U)} in degree {self.j}")
        return c[: self.dim]


@dataclass(frozen=True)
class HomologyBasis:
    U: int
    i: int
    p: int
    faces: tuple[int, ...]
    reps: np.ndarray
    bd_image: np.ndarray

    @property
    def dim(self) -> int:
        return self.reps.shape[1]


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.int64)
    a.setflags(write=False)
    return a


@lru_cache(maxsize=1 << 16)
def _cohomology(D: SimplicialComplex, U: int, j: int, p: int) -> CohomologyBasis:
    faces = faces_in(D, U, j)
    Z = linalg.kernel_basis(cochain_differential(D, U, j, p), p)
    B = linalg.column_basis(cochain_differential(D, U, j - 1, p), p)
    chosen = linalg.extend_basis(B, Z, p)
    return CohomologyBasis(U, j, p, faces, _frozen(Z[:, chosen]), _frozen(B))


def cohomology(D: SimplicialComplex, U: int, j: int, field=linalg.DEFAULT_PRIME) -> CohomologyBasis:
    return _cohomology(D, U, j, as_field(field).p)


def cohomology_dim(D: SimplicialComplex, U: int, j: int, field=linalg.DEFAULT_PRIME) -> int:
    return cohomology(D, U, j, field).dim


@lru_cache(maxsize=1 << 16)
def _homology(D: SimplicialComplex, U: int, i: int, p: int) -> HomologyBasis:
    faces = faces_in(D, U, i)
    Z = linalg.kernel_basis(boundary_matrix(D, U, i, p), p)
    B = linalg.column_basis(boundary_matrix(D, U, i + 1, p), p)
    chosen = linalg.extend_basis(B, Z, p)
    return HomologyBasis(U, i, p, faces, _frozen(Z[:, chosen]), _frozen(B))


def homology(D: SimplicialComplex, U: int, i: int, field=linalg.DEFAULT_PRIME) -> HomologyBasis:
    return _homology(D, U, i, as_field(field).p)


def restrict_cochain(cochain, src_faces, tgt_faces) -> np.ndarray:
    """Drop the coordinates of faces not in the smaller complex."""
    idx = _index(src_faces)
    cochain = np.asarray(cochain)
    return np.array([cochain[idx[G]] for G in tgt_faces], dtype=np.int64)


@lru_cache(maxsize=1 << 16)
def _restriction(D: SimplicialComplex, U: int, u: int, j: int, p: int) -> np.ndarray:
    src = _cohomology(D, U, j, p)
    tgt = _cohomology(D, U & ~(1 << (u - 1)), j, p)
    M = np.zeros((tgt.dim, src.dim), dtype=np.int64)
    if tgt.dim and src.dim:
        for c in range(src.dim):
            M[:, c] = tgt.coordinates(restrict_cochain(src.reps[:, c], src.faces, tgt.faces))
    return _frozen(M)


def restriction_on_cohomology(D: SimplicialComplex, U: int, u: int, j: int, field=linalg.DEFAULT_PRIME) -> np.ndarray:
    """Matrix of H̃^j(Δ_U) -> H̃^j(Δ_{U minus u}), ω -> ω|, in the ``reps`` bases."""
    if not U >> (u - 1) & 1:
        raise ValueError(f"vertex {u} is not in {members(U)}")
    return _restriction(D, U, u, j, as_field(field).p)


# ---------------------------------------------------------------------------
# chains and complete cycles


@dataclass(frozen=True)
class Chain:
    """A simplicial d-chain: face bitmask -> nonzero scalar."""

    d: int
    coeffs: dict = field(default_factory=dict)

    @property
    def support(self) -> int:
        m = 0
        for F in self.coeffs:
            m |= F
        return m

    def vector(self, faces, p: int) -> np.ndarray:
        idx = _index(faces)
        v = np.zeros(len(faces), dtype=np.int64)
        for F, c in self.coeffs.items():
            if F not in idx:
                raise ValueError(f"{members(F)} is not a {self.d}-face")
            v[idx[F]] = c % p
        return v

    @classmethod
    def from_vector(cls, d: int, faces, vec, p: int) -> "Chain":
        return cls(d, {F: int(c) % p for F, c in zip(faces, vec) if int(c) % p})


def is_cycle(z: Chain, D: SimplicialComplex, field=linalg.DEFAULT_PRIME) -> bool:
    F_ = as_field(field)
    full = (1 << D.n) - 1
    faces = faces_in(D, full, z.d)
    v = z.vector(faces, F_.p)
    return not linalg.matmul(boundary_matrix(D, full, z.d, F_), v.reshape(-1, 1), F_).any()


def complete_simplices(D: SimplicialComplex, W: int, d: int) -> list[int]:
    """Vertex sets σ ⊆ W with d+2 elements all of whose (d+1)-subsets are
    faces of Δ.  σ itself need not be a face."""
    out = []
    for s in subsets(W):
        if size(s) == d + 2 and all(D.is_face(s & ~(1 << (i - 1))) for i in members(s)):
            out.append(s)
    return sorted(out)


def simplex_boundary(s: int) -> dict[int, int]:
    return {s & ~(1 << (i - 1)): sign(i, s) for i in members(s)}


def complete_cycle_decomposition(z: Chain, D: SimplicialComplex, field=linalg.DEFAULT_PRIME, within: int | None = None):
    """Write the cycle z as Σ c_σ ∂σ with complete σ ⊆ supp(z).

    ``within`` widens the allowed vertex set (used for the homology-class
    variant).  Returns a list of ``(σ, c)`` or None when impossible.
    """
    F_ = as_field(field)
    if not is_cycle(z, D, F_):
        raise ValueError("chain is not a cycle")
    W = z.support if within is None else within
    faces = faces_in(D, W, z.d)
    sigmas = complete_simplices(D, W, z.d)
    G = np.zeros((len(faces), len(sigmas)), dtype=np.int64)
    idx = _index(faces)
    for c, s in enumerate(sigmas):
        for face, sg in simplex_boundary(s).items():
            G[idx[face], c] = sg % F_.p
    target = z.vector(faces, F_.p)
    coords = linalg.solve(G, target, F_)
    if coords is None:
        return None
    return [(s, int(c)) for s, c in zip(sigmas, coords) if c]


def reduced_euler_characteristic(D: SimplicialComplex, U: int) -> int:
    return sum(1 if size(F) % 2 else -1 for F in D.faces if F & ~U == 0)


def clear_caches() -> None:
    """Forget every cached face list, basis and restriction matrix."""
    for f in (_faces_in, _cohomology, _homology, _restriction):
        f.cache_clear()
