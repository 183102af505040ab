"""Attack planning and execution.

Six strategies: {random, initial-degree, initial-betweenness} x {node, edge}.
Selective strategies rank targets by centrality computed once on the intact
graph; ties are broken uniformly at random (seeded shuffle before a stable
descending sort). Node attacks are executed as bundles of incident edges,
removed one by one in seeded random order, with the performance between
bundle boundaries filled in by linear interpolation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import centrality
from .errors import IntegrityError, ParameterError
from .graph import Edge, Graph, edge_id, removal_size_sequence
from .rng import SeedLike, make_rng
from .robustness import PerformanceCurve

RULES = ("random", "initial-degree", "initial-betweenness")
TARGETS = ("node", "edge")


@dataclass(frozen=True)
class Strategy:
    target: str  # "node" | "edge"
    rule: str    # "random" | "initial-degree" | "initial-betweenness"

    def __post_init__(self):
        if self.target not in TARGETS:
            raise ParameterError(f"unknown target {self.target!r}")
        if self.rule not in RULES:
            raise ParameterError(f"unknown rule {self.rule!r}")

    @property
    def name(self) -> str:
        short = {"random": "rn", "initial-degree": "id", "initial-betweenness": "ib"}
        return f"{short[self.rule]}-{self.target}"


# CLI spellings
STRATEGY_NAMES = {
    "rn-edge": Strategy("edge", "random"),
    "id-edge": Strategy("edge", "initial-degree"),
    "ib-edge": Strategy("edge", "initial-betweenness"),
    "rn-node": Strategy("node", "random"),
    "id-node": Strategy("node", "initial-degree"),
    "ib-node": Strategy("node", "initial-betweenness"),
}


@dataclass
class AttackPlan:
    target: str
    units: list  # node ids or edge tuples, a permutation of the graph's
    fingerprint: tuple[int, int, str]

    def check_against(self, g: Graph) -> None:
        if self.fingerprint != g.fingerprint():
            raise IntegrityError("attack plan was built for a different graph")


@dataclass
class RemovalTrace:
    """(removed-edge-count, giant-size) checkpoints from 0 to E removals."""

    checkpoints: list[tuple[int, int]] = field(default_factory=list)


def initial_scores(g: Graph, strategy: Strategy):
    """Centrality map driving a selective strategy; None for random."""
    if strategy.rule == "random":
        return None
    if strategy.target == "edge":
        if strategy.rule == "initial-degree":
            return centrality.edge_degree(g)
        return centrality.edge_betweenness(g)
    if strategy.rule == "initial-degree":
        return centrality.node_degree(g)
    return centrality.node_betweenness(g)


def plan_attack(g: Graph, strategy: Strategy, seed: SeedLike,
                scores: dict | None = None) -> AttackPlan:
    """Full removal order over all edges (or all nodes) of g.

    scores: optional precomputed centrality map, so multi-trial campaigns
    rank once per strategy instead of once per trial.
    """
    if g.num_edges == 0:
        raise ParameterError("cannot attack a graph with no edges")
    targets = g.edges() if strategy.target == "edge" else list(g.nodes)
    rng = make_rng(seed)
    order = [targets[i] for i in rng.permutation(len(targets))]
    if strategy.rule != "random":
        if scores is None:
            scores = initial_scores(g, strategy)
        # stable sort after the shuffle: equal-score groups stay random
        order.sort(key=lambda t: scores[t], reverse=True)
    return AttackPlan(strategy.target, order, g.fingerprint())


def execute_edge_attack(g: Graph, plan: AttackPlan) -> RemovalTrace:
    """Remove edges in plan order, recording the giant size after each."""
    if plan.target != "edge":
        raise IntegrityError("expected an edge plan")
    plan.check_against(g)
    if sorted(plan.units) != g.edges():
        raise IntegrityError("plan is not a permutation of the graph's edges")
    sizes = removal_size_sequence(g, plan.units)
    return RemovalTrace([(i, s) for i, s in enumerate(sizes)])


def _expand_node_plan(g: Graph, plan: AttackPlan, rng: np.random.Generator):
    """Edge order plus cumulative bundle boundaries for a node plan."""
    if plan.target != "node":
        raise IntegrityError("expected a node plan")
    plan.check_against(g)
    if sorted(plan.units) != list(g.nodes):
        raise IntegrityError("plan is not a permutation of the graph's nodes")
    claimed: set[Edge] = set()
    order: list[Edge] = []
    boundaries: list[int] = []
    for node in plan.units:
        bundle = sorted(e for e in (edge_id(node, nb) for nb in g.neighbors(node))
                        if e not in claimed)
        if not bundle:
            continue  # zero-length bundle: no checkpoint
        rng.shuffle(bundle)
        claimed.update(bundle)
        order.extend(bundle)
        boundaries.append(len(order))
    return order, boundaries


def execute_node_attack(g: Graph, plan: AttackPlan, seed: SeedLike) -> RemovalTrace:
    """Remove each node's surviving incident edges as one bundle.

    Checkpoints are recorded at bundle boundaries only; nodes become
    isolated rather than deleted, keeping the normalization count fixed.
    """
    order, boundaries = _expand_node_plan(g, plan, make_rng(seed))
    sizes = removal_size_sequence(g, order)
    checkpoints = [(0, sizes[0])] + [(b, sizes[b]) for b in boundaries]
    return RemovalTrace(checkpoints)


def node_edge_transfer(g: Graph, plan: AttackPlan, seed: SeedLike) -> AttackPlan:
    """Expand a node plan into the corresponding full edge permutation."""
    order, _ = _expand_node_plan(g, plan, make_rng(seed))
    return AttackPlan("edge", order, plan.fingerprint)


def interpolate_trace(trace: RemovalTrace, n: int, e: int) -> PerformanceCurve:
    """Fill checkpoint gaps linearly and normalize by the node count.

    Between consecutive checkpoints (i, s_i) and (j, s_j) the value after m
    removals is s_i + (m - i)/(j - i) * (s_j - s_i). Edge-attack traces have
    a checkpoint at every integer and pass through unchanged.
    """
    cps = trace.checkpoints
    if not cps or cps[0][0] != 0 or cps[-1][0] != e:
        raise IntegrityError("trace must span removal counts 0..E")
    s = np.empty(e + 1)
    for (i, si), (j, sj) in zip(cps, cps[1:]):
        if j <= i:
            raise IntegrityError("checkpoint removal counts must increase")
        if sj > si:
            raise IntegrityError("giant size must be non-increasing")
        if not 1 <= sj <= si <= n:
            raise IntegrityError("giant size out of range")
        for m in range(i, j):
            s[m] = si + (m - i) / (j - i) * (sj - si)
    s[e] = cps[-1][1]
    if e == 0:
        s[0] = cps[0][1]
    return PerformanceCurve(s / n, n, e)
