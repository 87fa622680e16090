"""Exact graph dimension parameters, product constructions and reduction generators."""

from ._cover import BudgetExceeded
from .auxiliary import (
    GammaPrime,
    domination_number,
    gamma_prime,
    independence_number,
    is_dominating,
    is_locating_dominating,
    min_locating_dominating,
    vertex_cover_number,
)
from .construct import (
    CoronaRoles,
    complete,
    complete_bipartite,
    corona,
    cycle,
    family,
    fan,
    join,
    null,
    path,
    star,
    strong,
    strong_power,
    union,
    wheel,
)
from .dimension import (
    ADJACENCY,
    LOCAL_ADJACENCY,
    LOCAL_METRIC,
    METRIC,
    BasisCertificate,
    DimensionVariant,
    DisconnectedGraphError,
    dimension,
    enumerate_min_bases,
    is_generator,
    truncated,
    twin_lower_bound,
)
from .estimator import GraphParameterTransformer
from .graph import (
    FALSE_TWIN,
    SINGLETON,
    TRUE_TWIN,
    Graph,
    GraphError,
    MetricMatrix,
    TwinPartition,
    all_pairs_distances,
    complement,
    connected_components,
    delete_vertex,
    diameter,
    eccentricity,
    is_connected,
    parse_edge_list,
    radius,
    read_edge_list,
    twin_partition,
    write_edge_list,
)
from .metric import adjacency_distinguishes, distinguishes
from .specs import SpecError, parse_spec
from .theorems import (
    CoronaAdjCase,
    TheoremReport,
    classify_corona_adjacency,
    classify_corona_local,
    predicted_corona_adjacency,
    verify_corona_adjacency,
    verify_corona_dim,
    verify_corona_local,
    verify_strong_twin_lemma,
    verify_twin_theorem,
)
from .validation import check_graph

__version__ = "0.1.0"
