"""Strong coalition numbers of small graphs.

Vertices and partition blocks are 0-based. Styles are "strong" or "plain".
"""

from ._strongco import (
    CapacityError,
    Graph,
    build_scg,
    c_oracle,
    construct_from_domatic,
    count_all_sds,
    domatic,
    family_f_member,
    family_g_check,
    gamma,
    generate,
    is_dominating,
    parse_edge_list,
    random_graph,
    random_regular_graph,
    sc_oracle,
    solve,
    upper_bounds,
    validate_partition,
)

__all__ = [
    "CapacityError",
    "Graph",
    "build_scg",
    "c_oracle",
    "construct_from_domatic",
    "count_all_sds",
    "domatic",
    "family_f_member",
    "family_g_check",
    "gamma",
    "generate",
    "is_dominating",
    "parse_edge_list",
    "random_graph",
    "random_regular_graph",
    "sc_oracle",
    "solve",
    "upper_bounds",
    "validate_partition",
]
