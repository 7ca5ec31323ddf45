"""Low-distortion embeddings of graph shortest-path metrics.

Decides and constructs non-contracting embeddings of connected graph
metrics into the integer line (unweighted and bounded-weight) and into
bounded-degree trees, with exact brute-force oracles for cross-validation
and a generator for rigid weighted instances encoding 3-coloring.
"""

from .errors import (
    DisconnectedGraphError,
    DistortionBelowTwoError,
    GraphFormatError,
    InstanceTooLargeError,
    LowdistError,
    NonUnitWeightsError,
    NotAProperColoringError,
    NotATreeError,
    NotNonContractingError,
    ResourceBudgetExceededError,
)
from .graphs import WeightedGraph, graph_to_text, is_connected, parse_graph_text
from .metric import Metric, ball, local_density, shortest_path_metric
from .lineembed import (
    FeasibilitySides,
    LineEmbedding,
    Verdict,
    WindowEmbedding,
    check_line_embedding,
    compute_sides,
    count_feasible,
    embed_line,
    embed_line_weighted,
    is_feasible,
    iter_feasible_windows,
    pushing_normalize,
    succeeds,
    successor_candidates,
)
from .treeembed import (
    INF,
    RootedTree,
    TreeEmbedding,
    TypeFn,
    UPartialEmbedding,
    UState,
    beta,
    check_tree_embedding,
    components_toward,
    embed_tree,
    is_feasible_upartial,
    propagate_type,
    state_succeeds,
    states_from_embedding,
    typelist_compatible,
    typelists_agree,
    types_agree,
    upartial_succeeds,
)
from .oracle import brute_force_line, brute_force_tree, min_distortion_line
from .hardness import (
    EdgeVerdict,
    HardnessInstance,
    HardnessParams,
    generate,
    instance_metric,
    roles_to_text,
    validate_coloring,
    verify_metric_edges,
    witness_embedding,
)

__version__ = "0.1.0"
