"""Finite models of labelled-graph subgraph posets, partial-basis complexes of
free groups, and exact simplicial homology for checking them."""

__version__ = "0.1.0"

from .graph_core import LabelledGraph, enumerate_labelled_graphs, expected_dimension, l_separating_edges  # noqa: E402,F401
from .complex import SimplicialComplex, HomologyProfile, reduced_homology, cm_check, inflate  # noqa: E402,F401
from .poset import FinPoset, order_complex, build_nontrees, build_core_poset  # noqa: E402,F401
from .freegroup import CyclicWord, is_primitive_class, is_partial_basis_classes, build_B_truncation  # noqa: E402,F401

__all__ = [
    "LabelledGraph",
    "enumerate_labelled_graphs",
    "expected_dimension",
    "l_separating_edges",
    "SimplicialComplex",
    "HomologyProfile",
    "reduced_homology",
    "cm_check",
    "inflate",
    "FinPoset",
    "order_complex",
    "build_nontrees",
    "build_core_poset",
    "CyclicWord",
    "is_primitive_class",
    "is_partial_basis_classes",
    "build_B_truncation",
]
