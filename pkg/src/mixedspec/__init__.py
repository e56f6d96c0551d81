"""Integrated adjacency spectra of mixed graphs.

A mixed graph carries edges, arcs, loops and directed loops, each with a
multiplicity.  Its integrated adjacency matrix ``I(G)`` is the symmetric
``2n x 2n`` block matrix ``[[A(G_u), A(G_d)], [A(G_d)^T, A(G_u)]]``.
"""
from .adjacency import (AssociatedGraph, IndexMap, NotIntegratedAdjacencyError, associated_graph,
                        directed_adjacency, from_integrated, integrated_adjacency, undirected_adjacency)
from .bounds import (Bound, BoundsReport, all_bounds, clique_bound, clique_number, degree_bounds,
                     deletion_monotonicity, independence_bounds, independence_number,
                     regular_subgraph_bound)
from .components import (ComponentDomainError, ComponentType, Decomposition, FormulaInapplicableError,
                         MixedComponent, decompose, det_formula, determinant_terms, has_AB_property,
                         has_AC_property, has_AP_property, is_uniconnected)
from .families import Family, FamilyError, FamilySpec, generate
from .graph import (DegreeProfile, GraphDomainError, MixedGraph, counts, degree_profile,
                    degree_profiles, delete_arc, delete_edge, delete_vertex, disjoint_union,
                    induced_submixed, is_simple)
from .io import GraphParseError, parse, serialize
from .matrix import IntMatrix, Poly, char_poly_exact, det_exact, minor_char_poly, symmetric_eigen
from .spectra import (PreconditionError, SpectrumReport, VertexAddition, check_ab, check_interlacing,
                      check_perron, check_r_regular, check_rs_regular, check_trace_identities,
                      check_vertex_addition, family_spectrum_closed_form, spectrum)
from .walks import (Arc, Edge, ResourceLimitError, Walk, WalkClass, WalkDomainError, count_classified,
                    is_alternating, is_alternating_cycle, is_alternating_path, matrix_walk_entries)

__version__ = "0.1.0"
