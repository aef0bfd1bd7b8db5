import pytest

from srlin.corpus import random_corpus
from srlin.simplicial import complex_from_facets, complex_from_ideal, monomial_ideal, simplex

PRIMES = (2, 32003)
CORPUS_SEED = 20240601

# ⟨x1x2, x1x3, x2x3x4, x2x3x5⟩ in five variables
SAMPLE_GENERATORS = [(1, 1, 0, 0, 0), (1, 0, 1, 0, 0), (0, 1, 1, 1, 0), (0, 1, 1, 0, 1)]
SAMPLE_FACETS = [(2, 3), (1, 4, 5), (2, 4, 5), (3, 4, 5)]

# six-vertex triangulation of the real projective plane
RP2_FACETS = [(1, 2, 4), (1, 2, 6), (1, 3, 5), (1, 3, 6), (1, 4, 5), (2, 3, 4), (2, 3, 5), (2, 5, 6), (3, 4, 6), (4, 5, 6)]


def cycle(n):
    return complex_from_facets(n, [(i, i % n + 1) for i in range(1, n + 1)])


@pytest.fixture
def sample():
    return complex_from_ideal(monomial_ideal(5, SAMPLE_GENERATORS))


@pytest.fixture
def square():
    return cycle(4)


@pytest.fixture
def rp2():
    return complex_from_facets(6, RP2_FACETS)


@pytest.fixture
def full3():
    return simplex(3)


@pytest.fixture(scope="session")
def corpus():
    return random_corpus(200, CORPUS_SEED)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
