"""Eccentricity matrices of clique trees: exact spectra, inertia and structural checks."""

from . import _backend
from .blocks import (
    associated_tree,
    classify,
    decompose,
    diametrally_distinguished,
    even_partition,
    odd_partition,
)
from .errors import EccSpectraError, Inapplicable
from .exact import (
    IntPolynomial,
    InertiaTriple,
    asymmetry_witness,
    char_poly,
    inertia_exact,
    is_spectrum_symmetric_exact,
)
from .generators import (
    GeneratorSpec,
    clique_path,
    clique_star,
    complete_graph,
    fixture,
    random_ct_clique_tree,
)
from .graph import Graph, all_pairs_distances, build_graph, eccentricity_profile, parse_edge_list
from .matrix import IntSymMatrix, eccentricity_matrix, parse_matrix
from .spectra import Spectrum, inertia_float, symmetric_eigenvalues
from .theorems import GraphContext, TheoremReport, verify_all, verify_matrix

__version__ = "0.1.0"


def backend() -> str:
    """``"compiled"`` or ``"python"``: which kernel implementation is active."""
    return _backend.name()


def eccentricity_matrix_of(g: Graph) -> IntSymMatrix:
    d = all_pairs_distances(g)
    return eccentricity_matrix(d, eccentricity_profile(d))


__all__ = [
    "EccSpectraError", "GeneratorSpec", "Graph", "GraphContext", "Inapplicable", "InertiaTriple",
    "IntPolynomial", "IntSymMatrix", "Spectrum", "TheoremReport", "all_pairs_distances",
    "associated_tree", "asymmetry_witness", "backend", "build_graph", "char_poly", "classify",
    "clique_path", "clique_star", "complete_graph", "decompose", "diametrally_distinguished",
    "eccentricity_matrix", "eccentricity_matrix_of", "eccentricity_profile", "even_partition",
    "fixture", "inertia_exact", "inertia_float", "is_spectrum_symmetric_exact", "odd_partition",
    "parse_edge_list", "parse_matrix", "random_ct_clique_tree", "symmetric_eigenvalues",
    "verify_all", "verify_matrix",
]
