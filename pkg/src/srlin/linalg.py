"""Dense linear algebra over a prime field GF(p).

Matrices are plain ``numpy`` int64 arrays whose entries are kept reduced
mod p.  Everything here is exact; there is no floating point anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_PRIME = 32003

# products of two reduced entries must fit in int64
_MAX_PRIME = 2**31


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class GF:
    """The prime field with ``p`` elements."""

    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if not isinstance(self.p, (int, np.integer)) or not 2 <= self.p < _MAX_PRIME:
            raise ValueError(f"field characteristic must be a prime in [2, 2^31), got {self.p!r}")
        if not is_prime(int(self.p)):
            raise ValueError(f"{self.p} is not prime")

    def matrix(self, rows, shape=None) -> np.ndarray:
        """Build a reduced matrix from nested lists (or an existing array)."""
        if shape is not None and (rows is None or len(rows) == 0):
            return np.zeros(shape, dtype=np.int64)
        return np.asarray(rows, dtype=np.int64) % self.p

    def zeros(self, rows: int, cols: int) -> np.ndarray:
        return np.zeros((rows, cols), dtype=np.int64)

    def identity(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=np.int64)

    def inv(self, a: int) -> int:
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, self.p - 2, self.p)

    def symmetric(self, a: int) -> int:
        """Representative of ``a`` in (-p/2, p/2]; turns p-1 into -1."""
        a = int(a) % self.p
        return a - self.p if a > self.p // 2 else a


def as_field(field) -> GF:
    if isinstance(field, GF):
        return field
    return GF(int(field))


def matmul(A: np.ndarray, B: np.ndarray, field) -> np.ndarray:
    F = as_field(field)
    p = F.p
    if A.shape[1] != B.shape[0]:
        raise ValueError(f"shape mismatch {A.shape} @ {B.shape}")
    if A.shape[1] == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    # int64 accumulation is safe while k * (p-1)^2 < 2^63
    if A.shape[1] * (p - 1) ** 2 < 2**63:
        return (A @ B) % p
    return (A.astype(object) @ B.astype(object) % p).astype(np.int64)


def rref(M: np.ndarray, field) -> tuple[np.ndarray, list[int], int]:
    """Reduced row echelon form.

    Pivots are taken column by column from the left, using the first row
    with a nonzero entry.  Returns ``(R, pivot_columns, rank)``.
    """
    F = as_field(field)
    p = F.p
    R = np.array(M, dtype=np.int64) % p
    nrows, ncols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r] = (R[r] * F.inv(R[r, c])) % p
        col = R[:, c].copy()
        col[r] = 0
        if col.any():
            R = (R - np.outer(col, R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots, len(pivots)


def rank(M: np.ndarray, field) -> int:
    if M.size == 0:
        return 0
    return rref(M, field)[2]


def kernel_basis(M: np.ndarray, field) -> np.ndarray:
    """Columns form a basis of the null space of ``M``.

    One basis vector per free column, with that free variable set to 1 and
    the others to 0 (standard back-substitution from the rref).
    """
    F = as_field(field)
    p = F.p
    ncols = M.shape[1]
    if M.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    R, pivots, r = rref(M, F)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    K = np.zeros((ncols, len(free)), dtype=np.int64)
    for k, f in enumerate(free):
        K[f, k] = 1
        for row, pc in enumerate(pivots):
            K[pc, k] = (-R[row, f]) % p
    return K


def column_basis(M: np.ndarray, field) -> np.ndarray:
    """Independent columns of ``M`` (the pivot columns) spanning its image."""
    if M.shape[1] == 0:
        return M.copy()
    _, pivots, _ = rref(M, field)
    return np.array(M[:, pivots], dtype=np.int64) % as_field(field).p


def solve(A: np.ndarray, b: np.ndarray, field) -> np.ndarray | None:
    """Some solution x of ``A x = b`` (free variables zero), or None."""
    F = as_field(field)
    b = np.asarray(b, dtype=np.int64).reshape(-1)
    if A.shape[0] != b.shape[0]:
        raise ValueError(f"target has length {b.shape[0]}, expected {A.shape[0]}")
    ncols = A.shape[1]
    if A.shape[0] == 0:
        return np.zeros(ncols, dtype=np.int64)
    aug = np.concatenate([A % F.p, b.reshape(-1, 1) % F.p], axis=1)
    R, pivots, r = rref(aug, F)
    if pivots and pivots[-1] == ncols:
        return None
    x = np.zeros(ncols, dtype=np.int64)
    for row, pc in enumerate(pivots):
        x[pc] = R[row, ncols]
    return x


def solve_in_span(basis: np.ndarray, target, field) -> np.ndarray | None:
    """Coordinates of ``target`` in the (independent) columns of ``basis``."""
    return solve(basis, target, field)


def in_span(basis: np.ndarray, target, field) -> bool:
    return solve(basis, target, field) is not None


def extend_basis(start: np.ndarray, candidates: np.ndarray, field) -> list[int]:
    """Indices of candidate columns extending the independent columns of
    ``start`` to a basis of span(start, candidates), chosen greedily left
    to right (these are exactly the pivot columns past ``start``)."""
    F = as_field(field)
    if candidates.shape[1] == 0:
        return []
    width = start.shape[1]
    joined = np.concatenate([start % F.p, candidates % F.p], axis=1)
    _, pivots, _ = rref(joined, F)
    return [c - width for c in pivots if c >= width]
