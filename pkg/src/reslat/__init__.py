"""Finite commutative bounded integral residuated lattices, their filters,
comaximal filter graphs and zero-divisor graphs."""

__version__ = "0.1.0"

from .algebra import (ClassFlags, ResidualMissing, ResiduatedLattice, ValidationError, ValidationReport,
                      are_isomorphic, build, canonical_form, check, classify, derive_implication, relabel)
from .census import AlgebraSummary, BudgetExceeded, CensusRow, catalog, census, enumerate_algebras, shape_census
from .enumeration import LatticeSkeleton, complete_to_residuated, enumerate_skeletons
from .filters import (Filter, FilterLattice, all_filters, generated_filter, idempotent_generator, is_comaximal,
                      is_local, maximal_filters, prime_filters, radical)
from .formats import export_dot, load_algebra, parse_algebra, serialize_algebra
from .graphs import (GraphInvariants, LabeledGraph, comaximal_filter_graph, embeds_as_subgraph, graph_isomorphic,
                     invariants, maximal_partition, zero_divisor_graph)

__all__ = [
    "AlgebraSummary", "BudgetExceeded", "CensusRow", "ClassFlags", "Filter", "FilterLattice", "GraphInvariants",
    "LabeledGraph", "LatticeSkeleton", "ResidualMissing", "ResiduatedLattice", "ValidationError",
    "ValidationReport", "all_filters", "are_isomorphic", "build", "canonical_form", "catalog", "census", "check",
    "classify", "comaximal_filter_graph", "complete_to_residuated", "derive_implication", "embeds_as_subgraph",
    "enumerate_algebras", "enumerate_skeletons", "export_dot", "generated_filter", "graph_isomorphic",
    "idempotent_generator", "invariants", "is_comaximal", "is_local", "load_algebra", "maximal_filters",
    "maximal_partition", "parse_algebra", "prime_filters", "radical", "relabel", "serialize_algebra",
    "shape_census", "zero_divisor_graph",
]
