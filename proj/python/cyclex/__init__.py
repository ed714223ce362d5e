"""Graph engine for local connectivity and cycle extendability.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from ._core import (
    Graph,
    abc_partition,
    canonical_certificate,
    canonical_form,
    catalog,
    check_report_json,
    complement_of,
    complete_graph,
    cycle_graph,
    cyclable_sets,
    degree_profile,
    diameter,
    distance_sets,
    enumerate_graphs,
    every_vertex_on_triangle,
    find_induced,
    girth_circumference,
    has_cycle_of_order,
    hypothesis_membership,
    induce,
    induced_p3s,
    is_acyclic,
    is_connected,
    is_cycle_extendable,
    is_family_free,
    is_fully_cycle_extendable,
    is_hamiltonian,
    is_induced_subgraph_of,
    is_locally_connected,
    is_locally_dirac,
    is_locally_ore,
    is_weakly_pancyclic,
    join_of,
    named_graph,
    path_graph,
    proposition_lattice_checks,
    run_conjecture_search,
    run_verify,
    satisfies_condition_e1,
    star_graph,
    theorem_claim,
    theorem_ids,
    trace_t6_sequence,
    union_of,
    verify_theorem,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
