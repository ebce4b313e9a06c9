"""Exact arithmetic for the complete multipartite (r) basis of symmetric functions."""

from .chromatic import (
    SubsetCapExceeded,
    TuttePoly,
    chromatic_oracle,
    chromatic_r_expansion,
    chromatic_sym,
    evaluate_at_t,
    lemma_delta_check,
    tutte_sym,
    xb_partial_r_expansion,
)
from .graphs import (
    Graph,
    complement,
    complete_multipartite,
    graph_join,
    jmaximal_partitions,
    parse_graph,
    stable_partitions,
)
from .partitions import (
    Partition,
    SetPartition,
    composition_count,
    cycle_type_count,
    enumerate_set_partitions,
    enumerate_set_partitions_of_shape,
    join,
    meet,
    necklace_count,
    partitions_of,
    puzzles,
    refines,
    set_partition_count,
)
from .symfunc import (
    Basis,
    SymExpr,
    TransitionMatrix,
    coefficient,
    convert,
    generator,
    mtilde_multiply,
    otimes_multiply,
    transition_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "SubsetCapExceeded",
    "TuttePoly",
    "chromatic_oracle",
    "chromatic_r_expansion",
    "chromatic_sym",
    "evaluate_at_t",
    "lemma_delta_check",
    "tutte_sym",
    "xb_partial_r_expansion",
    "Graph",
    "complement",
    "complete_multipartite",
    "graph_join",
    "jmaximal_partitions",
    "parse_graph",
    "stable_partitions",
    "Partition",
    "SetPartition",
    "composition_count",
    "cycle_type_count",
    "enumerate_set_partitions",
    "enumerate_set_partitions_of_shape",
    "join",
    "meet",
    "necklace_count",
    "partitions_of",
    "puzzles",
    "refines",
    "set_partition_count",
    "Basis",
    "SymExpr",
    "TransitionMatrix",
    "coefficient",
    "convert",
    "generator",
    "mtilde_multiply",
    "otimes_multiply",
    "transition_matrix",
]
