import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from srlin.corpus import random_complex
from srlin.simplicial import (
    alpha,
    boundary_matrix_support,
    complex_from_facets,
    complex_from_ideal,
    ideal_from_complex,
    label,
    max_induced_chordless_cycle,
    members,
    minimal_nonfaces,
    monomial_ideal,
    polarize,
    simplex,
    size,
    squarefree_ideal,
    vset,
)

import brute
from conftest import SAMPLE_FACETS, SAMPLE_GENERATORS, cycle

masks6 = st.integers(0, 63)


def test_alpha_values():
    assert alpha(vset(), vset([1, 2, 3])) == 0
    assert alpha(vset([5]), vset([1, 2, 3, 4])) == 4
    assert alpha(vset([3]), vset([1, 2, 4])) == 2


@given(masks6, masks6, masks6)
def test_alpha_additive_on_disjoint_unions(A, B, C):
    B &= ~A
    assert alpha(A | B, C) == alpha(A, C) + alpha(B, C)


@given(masks6, masks6)
def test_alpha_matches_pair_count(A, B):
    assert alpha(A, B) == sum(1 for a in members(A) for b in members(B) if a > b)


def test_facets_as_given():
    D = complex_from_facets(5, SAMPLE_FACETS)
    assert sorted(members(f) for f in D.facets) == sorted(SAMPLE_FACETS)


def test_facets_absorb_subfaces():
    D = complex_from_facets(3, [(1, 2), (1,)])
    assert D.facets == (vset([1, 2]),)


def test_empty_face_flag():
    D = complex_from_facets(2, [], empty_face=True)
    assert D.is_irrelevant and D.faces == (0,)
    assert complex_from_facets(2, []).is_void


def test_out_of_range_vertex():
    with pytest.raises(ValueError):
        complex_from_facets(3, [(1, 4)])


def test_ideal_to_complex_examples():
    D = complex_from_ideal(monomial_ideal(5, SAMPLE_GENERATORS))
    assert sorted(D.facets) == sorted(vset(f) for f in SAMPLE_FACETS)
    assert complex_from_ideal(monomial_ideal(3, [])).facets == (0b111,)
    assert complex_from_ideal(monomial_ideal(2, [(1, 0)])).facets == (vset([2]),)


def test_complex_to_ideal_examples():
    I = ideal_from_complex(complex_from_facets(5, SAMPLE_FACETS))
    assert list(I.generators) == SAMPLE_GENERATORS
    assert ideal_from_complex(simplex(3)).is_zero
    assert set(ideal_from_complex(cycle(4)).generators) == {(1, 0, 1, 0), (0, 1, 0, 1)}


def test_unit_ideal_rejected():
    with pytest.raises(ValueError):
        complex_from_ideal(monomial_ideal(2, [(0, 0)]))


def test_nonsquarefree_rejected():
    with pytest.raises(ValueError):
        complex_from_ideal(monomial_ideal(2, [(2, 0)]))


def test_induced_examples(sample):
    sub = sample.induced(vset([1, 2, 3]))
    assert set(sub.faces) == {0, vset([1]), vset([2]), vset([3]), vset([2, 3])}
    hollow = sample.induced(vset([2, 3, 4]))
    assert set(hollow.faces_of_dim(1)) == {vset([2, 3]), vset([2, 4]), vset([3, 4])}
    assert not hollow.is_face(vset([2, 3, 4]))
    assert sample.induced(0b11111) == sample


def test_polarize_examples():
    J, names = polarize(monomial_ideal(1, [(2,)]))
    assert J.generators == ((1, 1),) and names == [(1, 1), (1, 2)]
    I = squarefree_ideal(3, [0b011, 0b110])
    J, names = polarize(I)
    assert J == I and names == [(1, 1), (2, 1), (3, 1)]
    J, names = polarize(monomial_ideal(2, [(2, 1), (0, 3)]))
    assert set(J.generators) == {(1, 1, 1, 0, 0), (0, 0, 1, 1, 1)}
    assert names == [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3)]


def test_boundary_support_signs():
    D = complex_from_facets(2, [(1, 2)])
    top, low, inc = boundary_matrix_support(D, 0)
    assert sorted(inc) == [(1, 0, 1), (2, 0, 1)]
    tri = complex_from_facets(3, [(1, 2), (1, 3), (2, 3)])
    _, _, inc = boundary_matrix_support(tri, 1)
    assert (vset([1, 2]), vset([2]), 1) in inc  # remove 1: alpha(1, 12) = 0
    assert (vset([1, 2]), vset([1]), -1) in inc  # remove 2: alpha(2, 12) = 1


def test_chordless_cycle_examples():
    assert max_induced_chordless_cycle(cycle(6)) == 6
    tree = complex_from_facets(5, [(1, 2), (1, 3), (3, 4), (3, 5)])
    assert max_induced_chordless_cycle(tree) is None
    # a 6-cycle with one chord splits into two 4-cycles or a triangle and a 5-cycle
    assert max_induced_chordless_cycle(complex_from_facets(6, cycle(6).facets + (vset([1, 4]),))) == 4
    assert max_induced_chordless_cycle(complex_from_facets(6, cycle(6).facets + (vset([1, 3]),))) == 5
    assert max_induced_chordless_cycle(complex_from_facets(7, cycle(7).facets + (vset([1, 4]),))) == 5


def test_chordless_cycle_rejects_higher_dim(sample):
    with pytest.raises(ValueError):
        max_induced_chordless_cycle(sample)


def _nx_longest_hole(D):
    G = nx.Graph()
    G.add_nodes_from(range(1, D.n + 1))
    G.add_edges_from(members(e) for e in D.faces_of_dim(1))
    lengths = [len(c) for c in nx.chordless_cycles(G) if len(c) >= 4]
    return max(lengths, default=None)


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 8), st.floats(0.1, 0.9), st.integers(0, 10**6))
def test_chordless_cycle_matches_networkx(n, prob, seed):
    rng = random.Random(seed)
    edges = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if rng.random() < prob]
    D = complex_from_facets(n, edges + [(v,) for v in range(1, n + 1)])
    assert max_induced_chordless_cycle(D) == _nx_longest_hole(D)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 6), st.floats(0.1, 0.9), st.integers(0, 10**6))
def test_minimal_nonfaces_brute(n, prob, seed):
    D = random_complex(n, prob, random.Random(seed), vertex_prob=0.8)
    expected = brute.minimal_nonfaces([members(f) for f in D.facets], n)
    assert sorted(members(m) for m in minimal_nonfaces(D)) == sorted(expected)


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 7), st.floats(0.1, 0.9), st.integers(0, 10**6))
def test_ideal_complex_roundtrip(n, prob, seed):
    D = random_complex(n, prob, random.Random(seed), vertex_prob=0.8)
    I = ideal_from_complex(D)
    if I.generators and any(sum(g) == 0 for g in I.generators):
        return
    assert complex_from_ideal(I) == D
    assert ideal_from_complex(complex_from_ideal(I)) == I


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.floats(0.1, 0.9), st.integers(0, 10**6), st.data())
def test_induced_is_transitive(n, prob, seed, data):
    D = random_complex(n, prob, random.Random(seed))
    U = data.draw(st.integers(1, (1 << n) - 1))
    u = data.draw(st.sampled_from(members(U)))
    W = U & ~(1 << (u - 1))
    assert D.induced(W) == D.induced(U).induced(W)
    assert set(D.induced(U).faces) == {F for F in D.faces if F & ~U == 0}


def test_faces_match_brute(sample):
    assert {frozenset(members(F)) for F in sample.faces} == brute.faces_from_facets(SAMPLE_FACETS)


def test_labels():
    assert label(0) == "0"
    assert label(vset([1, 2, 3])) == "123"
    assert label(vset([2, 11])) == "2,11"
    assert size(vset([1, 5, 9])) == 3
