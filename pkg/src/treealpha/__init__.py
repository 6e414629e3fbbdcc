"""Tree decompositions with bounded bag independence for P5-free graphs.

Given a P5-free graph and a target ``ell``, the engine either finds an
induced balanced biclique K_{ell,ell} or constructs a tree decomposition in
which every bag has independence number at most ``4*ell``, together with the
low-independence-neighborhood toolkit, dominated balanced separators, and
oracle-grade verification machinery used to audit every bound.
"""

from .graph import (
    Graph,
    GraphParseError,
    closed_neighborhood,
    components,
    induced_subgraph,
    is_complete_between,
    open_neighborhood,
    parse_graph,
    serialize_graph,
)
from .oracles import (
    ForbiddenStructureFound,
    MatchingResult,
    Witness,
    alpha_of_subset,
    bipartite_max_matching,
    find_induced_biclique,
    find_induced_path,
    max_independent_set,
    verify_witness,
)
from .degeneracy import (
    LowAlphaReport,
    alpha_degeneracy,
    low_alpha_vertex,
)
from .treedecomp import (
    TreeDecomposition,
    cobagged_pairs,
    closed_neighborhood_bag,
    find_bag_containing_set,
    parse_td,
    restrict,
    serialize_td,
    subtree_distance,
    td_alpha,
    validate,
)
from .separators import (
    SeparatorCertificate,
    dbs_low_alpha_vertex,
    get_separator_provider,
    gyarfas_dominated_separator,
)
from .decomposer import (
    DecompositionError,
    approximate_tia,
    decompose,
    saturate_root,
)
from .harness import (
    TrialRecord,
    audit_sandwich,
    exact_tia,
    gen_class_free,
    gen_p5_free,
    induced_biclique_number,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphParseError",
    "parse_graph",
    "serialize_graph",
    "closed_neighborhood",
    "open_neighborhood",
    "components",
    "is_complete_between",
    "induced_subgraph",
    "Witness",
    "MatchingResult",
    "ForbiddenStructureFound",
    "verify_witness",
    "max_independent_set",
    "alpha_of_subset",
    "bipartite_max_matching",
    "find_induced_path",
    "find_induced_biclique",
    "LowAlphaReport",
    "low_alpha_vertex",
    "alpha_degeneracy",
    "TreeDecomposition",
    "validate",
    "td_alpha",
    "cobagged_pairs",
    "find_bag_containing_set",
    "closed_neighborhood_bag",
    "restrict",
    "subtree_distance",
    "parse_td",
    "serialize_td",
    "SeparatorCertificate",
    "gyarfas_dominated_separator",
    "get_separator_provider",
    "dbs_low_alpha_vertex",
    "DecompositionError",
    "decompose",
    "saturate_root",
    "approximate_tia",
    "TrialRecord",
    "audit_sandwich",
    "exact_tia",
    "gen_p5_free",
    "gen_class_free",
    "induced_biclique_number",
]
