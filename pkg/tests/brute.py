"""Slow, independent reference computations used as test oracles.

Nothing here touches srlin's linear algebra or face machinery: complexes are
plain sets of frozensets, ranks come from a textbook elimination over GF(p),
and boundary signs use the position of the removed vertex.
"""
from itertools import chain, combinations


def powerset(vs):
    vs = sorted(vs)
    return chain.from_iterable(combinations(vs, k) for k in range(len(vs) + 1))


def faces_from_facets(facets):
    out = set()
    for f in facets:
        out.update(frozenset(s) for s in powerset(f))
    return out


def rank_mod_p(rows, p):
    rows = [[x % p for x in r] for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][c]:
                f = rows[r][c]
                rows[r] = [(a - f * b) % p for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _boundary_rank(faces, d, p):
    """rank of C_d -> C_{d-1} (d = 0 maps onto the empty face)."""
    src = sorted((tuple(sorted(f)) for f in faces if len(f) == d + 1))
    tgt = sorted((tuple(sorted(f)) for f in faces if len(f) == d))
    if not src or not tgt:
        return 0
    idx = {f: k for k, f in enumerate(tgt)}
    rows = [[0] * len(src) for _ in tgt]
    for c, f in enumerate(src):
        for k in range(len(f)):
            g = f[:k] + f[k + 1:]
            rows[idx[g]][c] = (-1) ** k
    return rank_mod_p(rows, p)


def reduced_homology_dims(faces, p):
    """{d: dim H̃_d} for the complex given by its face set (may be void)."""
    if not faces:
        return {}
    top = max(len(f) for f in faces) - 1
    out = {}
    for d in range(-1, top + 1):
        nd = sum(1 for f in faces if len(f) == d + 1)
        h = nd - _boundary_rank(faces, d, p) - _boundary_rank(faces, d + 1, p)
        if h:
            out[d] = h
    return out


def induced(faces, U):
    U = frozenset(U)
    return {f for f in faces if f <= U}


def hochster(facets, n, p):
    """{(i, U as sorted tuple): beta} via the homology of every induced subcomplex."""
    faces = faces_from_facets(facets)
    out = {}
    for U in powerset(range(1, n + 1)):
        for d, h in reduced_homology_dims(induced(faces, U), p).items():
            out[(len(U) - d - 1, U)] = h
    return out


def minimal_nonfaces(facets, n):
    faces = faces_from_facets(facets)
    nonfaces = [frozenset(S) for S in powerset(range(1, n + 1)) if frozenset(S) not in faces]
    return sorted(
        (tuple(sorted(S)) for S in nonfaces if all(S - {v} in faces for v in S)),
        key=lambda t: (len(t), t),
    )


def cycle_facets(n):
    return [(i, i % n + 1) for i in range(1, n + 1)]
