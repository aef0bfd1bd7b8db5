"""Linear parts, Betti numbers and linearity defects of Stanley-Reisner ideals over GF(p)."""
from .cohomology import cohomology, cohomology_dim, complete_cycle_decomposition, homology, restriction_on_cohomology
from .corpus import random_complex
from .defect import froberg_lindef, is_componentwise_linear, linearity_defect_ideal, restriction_kernel
from .linalg import DEFAULT_PRIME, GF
from .linear_part import betti_table, build_linear_part, koszul_slice_check, strand, two_linear_strand_basis
from .oracle import cross_validate, minimal_free_resolution, nu_report
from .simplicial import (
    SimplicialComplex,
    complex_from_facets,
    complex_from_ideal,
    ideal_from_complex,
    monomial_ideal,
    polarize,
)

__all__ = [
    "DEFAULT_PRIME",
    "GF",
    "SimplicialComplex",
    "betti_table",
    "build_linear_part",
    "cohomology",
    "cohomology_dim",
    "complete_cycle_decomposition",
    "complex_from_facets",
    "complex_from_ideal",
    "cross_validate",
    "froberg_lindef",
    "homology",
    "ideal_from_complex",
    "is_componentwise_linear",
    "koszul_slice_check",
    "linearity_defect_ideal",
    "minimal_free_resolution",
    "monomial_ideal",
    "nu_report",
    "polarize",
    "random_complex",
    "restriction_kernel",
    "restriction_on_cohomology",
    "strand",
    "two_linear_strand_basis",
]
