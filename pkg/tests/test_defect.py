import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from srlin.corpus import random_complex
from srlin.defect import (
    froberg_lindef,
    is_componentwise_linear,
    linearity_defect_ideal,
    restriction_kernel,
)
from srlin.oracle import minimal_free_resolution, nu_report
from srlin.simplicial import complex_from_facets, simplex, vset

from conftest import PRIMES, cycle

V = vset


def test_restriction_kernel_examples(sample):
    assert restriction_kernel(sample, V([2, 3, 4]), 1).shape[1] == 1
    assert restriction_kernel(sample, V([1, 2, 3, 4]), 1).shape[1] == 0
    assert restriction_kernel(sample, V([1, 2]), 1).shape[1] == 0


@pytest.mark.parametrize("p", PRIMES)
@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_cycles(n, p):
    rep = linearity_defect_ideal(cycle(n), p)
    assert rep.ld_ideal == n - 3
    U, j, cls = rep.witness
    assert U == (1 << n) - 1 and j == 1 and len(cls) == 1


def test_example_defect(sample):
    rep = linearity_defect_ideal(sample)
    assert rep.ld_ideal == 0 and rep.witness is None
    assert not rep.zero_ideal and not rep.has_variables


def test_zero_ideal_flag():
    rep = linearity_defect_ideal(simplex(3))
    assert rep.ld_ideal == 0 and rep.zero_ideal
    assert rep.to_json()["zero_ideal"] is True


def test_variables_flag():
    rep = linearity_defect_ideal(complex_from_facets(3, [(2, 3)]))
    assert rep.has_variables and rep.ld_ideal == 0


def test_irrelevant_complex():
    # I = (x1, x2, x3): linear resolution
    rep = linearity_defect_ideal(complex_from_facets(3, [], empty_face=True))
    assert rep.ld_ideal == 0 and rep.has_variables


def test_void_rejected():
    with pytest.raises(ValueError):
        linearity_defect_ideal(complex_from_facets(2, []))


def test_cwl_example(sample):
    rep = is_componentwise_linear(sample)
    assert rep.verdicts == {1: True, 2: True, 3: True, 4: True}
    assert rep.componentwise_linear and not rep.counterexamples


def test_cwl_square(square):
    rep = is_componentwise_linear(square)
    assert rep.verdicts == {1: False, 2: False, 3: False, 4: False}
    assert rep.counterexamples[1]["U"] == [1, 2, 3, 4]
    assert rep.counterexamples[2]["U"] == [1, 2, 3, 4] and rep.counterexamples[2]["j"] == 1
    hollow = {tuple(t["face"]) for t in rep.counterexamples[3]["cycle"]["terms"]}
    assert hollow == {(1, 2), (2, 3), (3, 4), (1, 4)}
    assert set(rep.to_json()["conditions"].values()) == {False}


def test_cwl_simplex():
    assert is_componentwise_linear(simplex(4)).componentwise_linear


def test_froberg_examples(square):
    assert froberg_lindef(cycle(6)) == (3, True)
    assert froberg_lindef(square) == (1, True)
    # fan graph: the path 2-3-4-5 joined to 1, which is chordal
    fan = complex_from_facets(5, [(1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (3, 4), (4, 5)])
    assert froberg_lindef(fan) == (0, True)


def test_froberg_preconditions(sample):
    with pytest.raises(ValueError):
        froberg_lindef(sample)
    with pytest.raises(ValueError):
        froberg_lindef(complex_from_facets(3, [(1, 2)]))


def test_rp2_defect_depends_on_characteristic(rp2):
    # over GF(2) the fundamental class lives in H̃^2 and every vertex deletion
    # leaves a Möbius band, so nothing detects it; H̃^1 survives restriction
    rep = linearity_defect_ideal(rp2, 2)
    assert rep.ld_ideal == 2 and rep.witness == (0b111111, 2, [1])
    assert rep.per_position[(3, 0b111111)] == 0
    odd = linearity_defect_ideal(rp2, 32003)
    assert odd.ld_ideal == 0 and (2, 0b111111) not in odd.per_position
    for p, ld in ((2, 2), (32003, 0)):
        assert nu_report(minimal_free_resolution(rp2, p)).ld_ideal == ld


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.floats(0.15, 0.9), st.integers(0, 10**6), st.sampled_from(PRIMES))
def test_defect_matches_oracle(n, prob, seed, p):
    D = random_complex(n, prob, random.Random(seed), vertex_prob=0.8)
    rep = linearity_defect_ideal(D, p)
    if rep.zero_ideal:
        return
    nu = nu_report(minimal_free_resolution(D, p))
    assert rep.ld_ideal == nu.ld_ideal
    for (i, U), k in rep.per_position.items():
        assert nu.kernels[(i + 1, U)] == k


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 7), st.floats(0.2, 0.8), st.integers(0, 10**6), st.sampled_from(PRIMES))
def test_froberg_on_random_graphs(n, prob, seed, p):
    rng = random.Random(seed)
    edges = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if rng.random() < prob]
    D = complex_from_facets(n, edges + [(v,) for v in range(1, n + 1)])
    value, agrees = froberg_lindef(D, p)
    assert agrees


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), st.floats(0.15, 0.9), st.integers(0, 10**6), st.sampled_from(PRIMES))
def test_cwl_conditions_agree(n, prob, seed, p):
    D = random_complex(n, prob, random.Random(seed), vertex_prob=0.8)
    rep = is_componentwise_linear(D, p)  # raises if the four verdicts differ
    assert rep.consistent
    assert rep.componentwise_linear == (linearity_defect_ideal(D, p).ld_ideal == 0)
    for cex in rep.counterexamples.values():
        assert all(1 <= v <= n for v in cex["U"])
