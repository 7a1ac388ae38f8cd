"""Exact toolkit for topological integer-additive set-labelings (TIASL) of
finite simple graphs: verification, explicit constructions, bounded search,
and desk-scale enumeration of the finite topologies that drive them."""

from .constructive import (
    label_any_pendant,
    label_pan,
    label_shovel,
    label_star_discrete,
    label_tadpole,
    realize_topology_star,
    saturate_realization,
)
from .graph import (
    CATALOG_GUARD,
    Graph,
    complete,
    complete_bipartite,
    connected_graph_catalog,
    cycle,
    emit_graph6,
    format_edge_list,
    is_connected,
    isolated_vertices,
    ladle,
    pan,
    parse_edge_list,
    parse_graph6,
    path,
    pendant_vertices,
    shovel,
    star,
    tadpole,
)
from .intset import (
    UNIVERSE_LIMIT,
    DomainError,
    GroundSet,
    IntSet,
    ParseError,
    canonical_key,
    format_set,
    is_subset,
    nontrivial_summand_pairs,
    parse_set_text,
    sumset,
    sumset_mask,
)
from .labeling import (
    SetLabeling,
    VerificationReport,
    format_labeling,
    format_report,
    induced_edge_labels,
    parse_labeling_text,
    report_to_dict,
    report_to_json,
    restriction_check,
    verify_iasl,
    verify_tiasi,
    verify_tiasl,
)
from .search import (
    AdmissibilityVerdict,
    Certificate,
    SearchBounds,
    SearchOutcome,
    SearchWitness,
    SweepEntry,
    SweepReport,
    bijection_match,
    default_bounds,
    discrete_admissibility,
    find_tiasl,
    format_search_outcome,
    format_sweep_report,
    outcome_to_dict,
    sweep_report_to_dict,
    theorem_sweep,
    topological_set_indexing_number,
)
from .topology import (
    ENUMERATE_GUARD,
    GROUND_SIZE_GUARD,
    OPEN_COUNT_GUARD,
    CompatibilityGraph,
    MinPendantRequirements,
    Topology,
    TopologyCheck,
    Violation,
    chain_topology,
    check_topology,
    compatibility_graph,
    discrete_topology,
    enumerate_topologies,
    format_topology,
    indiscrete_topology,
    min_pendant_requirements,
    parse_topology_text,
    sierpinski_topology,
    topologies_with_open_count,
)

__version__ = "0.1.0"
