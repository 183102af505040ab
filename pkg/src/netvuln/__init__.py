"""netvuln: quantify network robustness under random and targeted attacks."""

from .attacks import (
    AttackPlan,
    RemovalTrace,
    Strategy,
    STRATEGY_NAMES,
    execute_edge_attack,
    execute_node_attack,
    interpolate_trace,
    node_edge_transfer,
    plan_attack,
)
from .centrality import edge_betweenness, edge_degree, node_betweenness, node_degree
from .generators import WsParams, generate_ws
from .graph import Graph, giant_component_size
from .io import RunConfig, parse_edge_list, run_campaign, write_results
from .robustness import (
    DEFAULT_ALPHAS,
    PerformanceCurve,
    RobustnessReport,
    TransferComparison,
    aggregate_trials,
    classify,
    compare_node_edge,
    curve_area,
    index_I1_fast,
    invulnerability_index,
)

__all__ = [
    "AttackPlan",
    "DEFAULT_ALPHAS",
    "Graph",
    "PerformanceCurve",
    "RemovalTrace",
    "RobustnessReport",
    "RunConfig",
    "STRATEGY_NAMES",
    "Strategy",
    "TransferComparison",
    "WsParams",
    "aggregate_trials",
    "classify",
    "compare_node_edge",
    "curve_area",
    "edge_betweenness",
    "edge_degree",
    "execute_edge_attack",
    "execute_node_attack",
    "generate_ws",
    "giant_component_size",
    "index_I1_fast",
    "interpolate_trace",
    "invulnerability_index",
    "node_betweenness",
    "node_degree",
    "node_edge_transfer",
    "parse_edge_list",
    "plan_attack",
    "run_campaign",
    "write_results",
]

__version__ = "0.1.0"
