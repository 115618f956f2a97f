"""Graphs realizing a prescribed finite automorphism group with arbitrarily large cliques."""

from .constructions import (
    BoostCertificate,
    ConstructionError,
    RealizationError,
    VerificationReport,
    asymmetric_six,
    clique_boost,
    corollary_base,
    frucht_graph,
    iterate_boost,
    lift_automorphism,
    realize_group,
    unbounded_family,
    verify_boost,
)
from .formats import (
    FormatError,
    emit_dot,
    emit_edge_list,
    emit_graph6,
    parse_edge_list,
    parse_graph6,
)
from .graph import (
    Graph,
    GraphError,
    complement,
    complete_graph,
    cycle_graph,
    empty_graph,
    induced_subgraph,
    is_complete,
    is_connected,
    path_graph,
)
from .invariants import (
    InvariantReport,
    SolverCapExceeded,
    chromatic_number,
    count_cliques_of_size,
    genus_lower_bound,
    invariant_report,
    max_clique,
    omega_brute,
)
from .symmetry import (
    GroupSpec,
    PermGroup,
    Permutation,
    aut_brute_force,
    aut_group,
    closure_order,
    compose,
    equitable_refinement,
    group_from_spec,
    groups_isomorphic,
    identity,
    inverse,
    is_automorphism,
)

__version__ = "0.1.0"

__all__ = [
    "BoostCertificate",
    "ConstructionError",
    "FormatError",
    "Graph",
    "GraphError",
    "GroupSpec",
    "InvariantReport",
    "PermGroup",
    "Permutation",
    "RealizationError",
    "SolverCapExceeded",
    "VerificationReport",
    "asymmetric_six",
    "aut_brute_force",
    "aut_group",
    "chromatic_number",
    "clique_boost",
    "closure_order",
    "complement",
    "complete_graph",
    "compose",
    "corollary_base",
    "count_cliques_of_size",
    "cycle_graph",
    "emit_dot",
    "emit_edge_list",
    "emit_graph6",
    "empty_graph",
    "equitable_refinement",
    "frucht_graph",
    "genus_lower_bound",
    "group_from_spec",
    "groups_isomorphic",
    "identity",
    "induced_subgraph",
    "invariant_report",
    "inverse",
    "is_automorphism",
    "is_complete",
    "is_connected",
    "iterate_boost",
    "lift_automorphism",
    "max_clique",
    "omega_brute",
    "parse_edge_list",
    "parse_graph6",
    "path_graph",
    "realize_group",
    "unbounded_family",
    "verify_boost",
]
