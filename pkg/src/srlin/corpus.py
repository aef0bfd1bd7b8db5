"""Reproducible random simplicial complexes."""
from __future__ import annotations

import random
from itertools import combinations

from .simplicial import SimplicialComplex, complex_from_facets, vset


def random_complex(n: int, face_prob: float, rng: random.Random, vertex_prob: float = 1.0) -> SimplicialComplex:
    """Each vertex set S with #S >= 2 is drawn as a generating face with
    probability face_prob^(#S - 1); each vertex is drawn with probability
    ``vertex_prob``.  A vertex left out of every draw becomes a nonface."""
    gens = [(v,) for v in range(1, n + 1) if rng.random() < vertex_prob]
    for k in range(2, n + 1):
        w = face_prob ** (k - 1)
        for S in combinations(range(1, n + 1), k):
            if rng.random() < w:
                gens.append(S)
    return complex_from_facets(n, [vset(S) for S in gens], empty_face=True)


def random_corpus(count: int, seed: int, max_n: int = 6) -> list[SimplicialComplex]:
    """``count`` distinct complexes, n in 2..max_n weighted towards larger n,
    varying densities, occasional nonface vertices."""
    rng = random.Random(seed)
    sizes = [n for n in range(2, max_n + 1) for _ in range(n - 1)]
    out, seen = [], set()
    while len(out) < count:
        n = rng.choice(sizes)
        face_prob = rng.choice([0.2, 0.3, 0.4, 0.5, 0.65, 0.8])
        vertex_prob = 1.0 if rng.random() < 0.8 else 0.5
        D = random_complex(n, face_prob, rng, vertex_prob)
        if D not in seen:
            seen.add(D)
            out.append(D)
    return out
