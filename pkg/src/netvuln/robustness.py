"""Invulnerability indexes from performance curves.

The index over removal fraction alpha is the integral, for r in [0, alpha],
of the normalized giant-component size s(r) minus the baseline 1 - r.
Positive means robust (fewer nodes lost than edges removed), negative means
fragile. The curve integral is a trapezoid sum over the discrete points; the
baseline integral is the analytic alpha^2/2 - alpha term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ParameterError

DEFAULT_ALPHAS = (0.2, 0.5, 0.7, 1.0)


@dataclass
class PerformanceCurve:
    """Normalized giant-component sizes s_0..s_E indexed by removed edges."""

    s: np.ndarray
    n: int
    e: int

    def __post_init__(self):
        self.s = np.asarray(self.s, dtype=float)
        if len(self.s) != self.e + 1:
            raise ParameterError("curve must have E+1 samples")
        if np.any(np.diff(self.s) > 1e-12):
            raise ParameterError("curve must be non-increasing")
        if self.s[0] > 1.0 + 1e-12 or self.s[-1] < 0.0:
            raise ParameterError("curve values must lie in [0, 1]")


def _samples(curve: PerformanceCurve, paper_compat: bool) -> np.ndarray:
    """Curve samples, with the terminal point clamped to 0 in compat mode.

    A fully attacked graph still has singleton components, so the true
    terminal value is 1/N; the closed-form I_1 formula assumes it is 0.
    Clamping is the default so both routes agree exactly.
    """
    if paper_compat and curve.s[-1] != 0.0:
        s = curve.s.copy()
        s[-1] = 0.0
        return s
    return curve.s


def curve_area(curve: PerformanceCurve, alpha: float,
               paper_compat: bool = True, exact: bool = False) -> float:
    """Area under the performance curve up to removal fraction alpha.

    Default mode is the published discretization: trapezoids over the first
    ceil(alpha*E) unit steps, which overshoots alpha when alpha*E is not an
    integer. exact=True instead integrates the piecewise-linear curve to
    exactly alpha with a partial final trapezoid.
    """
    if not 0.0 < alpha <= 1.0:
        raise ParameterError("alpha must lie in (0, 1]")
    s = _samples(curve, paper_compat)
    ee = curve.e
    if exact:
        x = alpha * ee
        f = int(math.floor(x))
        area = float(np.sum((s[:f] + s[1 : f + 1]) / 2.0))
        if x > f:
            sx = s[f] + (x - f) * (s[f + 1] - s[f])
            area += (s[f] + sx) / 2.0 * (x - f)
        return area / ee
    e = math.ceil(alpha * ee)
    return float(np.sum((s[:e] + s[1 : e + 1]) / 2.0)) / ee


def invulnerability_index(curve: PerformanceCurve, alpha: float,
                          paper_compat: bool = True, exact: bool = False) -> float:
    """Trapezoid curve area plus the analytic baseline term alpha^2/2 - alpha."""
    index = curve_area(curve, alpha, paper_compat, exact) + (alpha * alpha / 2.0 - alpha)
    assert -0.5 - 1e-9 <= index <= 0.5 + 1e-9
    return index


def index_I1_fast(curve: PerformanceCurve, paper_compat: bool = True) -> float:
    """Closed-form I_1: (sum of samples - 1/2)/E - 1/2.

    Equals invulnerability_index(curve, 1.0) exactly when s_0 = 1 and
    s_E = 0 (the trapezoid sum telescopes to the plain sum then).
    """
    s = _samples(curve, paper_compat)
    a1 = (float(np.sum(s)) - 0.5) / curve.e
    return a1 - 0.5


def classify(index: float) -> str:
    """Sign verdict: robust above the baseline, fragile below, neutral on it."""
    if index > 0.0:
        return "robust"
    if index < 0.0:
        return "fragile"
    return "neutral"


@dataclass
class RobustnessReport:
    strategy: str
    trial: int
    seed: int
    areas: dict[float, float] = field(default_factory=dict)
    subindexes: dict[float, float] = field(default_factory=dict)
    verdicts: dict[float, str] = field(default_factory=dict)


def build_report(curve: PerformanceCurve, alphas, strategy: str, trial: int,
                 seed: int, paper_compat: bool = True, exact: bool = False) -> RobustnessReport:
    report = RobustnessReport(strategy, trial, seed)
    for alpha in alphas:
        a = curve_area(curve, alpha, paper_compat, exact)
        i = invulnerability_index(curve, alpha, paper_compat, exact)
        report.areas[alpha] = a
        report.subindexes[alpha] = i
        report.verdicts[alpha] = classify(i)
    return report


@dataclass
class TransferComparison:
    """Node-attack vs transferred-edge-attack indexes, per alpha."""

    rule: str
    node_index: dict[float, float]
    edge_index: dict[float, float]

    def error(self, alpha: float) -> float:
        return self.edge_index[alpha] - self.node_index[alpha]

    def max_abs_error(self) -> float:
        return max(abs(self.error(a)) for a in self.node_index)


def compare_node_edge(g, rule: str, seed: int, alphas=DEFAULT_ALPHAS,
                      paper_compat: bool = True) -> TransferComparison:
    """Run a node attack and the corresponding expanded edge attack.

    The edge attack uses an independent stream for its per-bundle edge
    orders, so the two curves differ inside bundles; the indexes should
    stay close (that is the approximation being measured).
    """
    from . import attacks  # local import: attacks depends on this module

    ss = np.random.SeedSequence(seed)
    plan_ss, node_ss, edge_ss = ss.spawn(3)
    strategy = attacks.Strategy("node", rule)
    plan = attacks.plan_attack(g, strategy, plan_ss)
    node_trace = attacks.execute_node_attack(g, plan, node_ss)
    edge_plan = attacks.node_edge_transfer(g, plan, edge_ss)
    edge_trace = attacks.execute_edge_attack(g, edge_plan)
    node_curve = attacks.interpolate_trace(node_trace, g.n, g.num_edges)
    edge_curve = attacks.interpolate_trace(edge_trace, g.n, g.num_edges)
    node_idx = {a: invulnerability_index(node_curve, a, paper_compat) for a in alphas}
    edge_idx = {a: invulnerability_index(edge_curve, a, paper_compat) for a in alphas}
    return TransferComparison(rule, node_idx, edge_idx)


def aggregate_trials(reports: list[RobustnessReport]) -> dict[float, dict[str, float]]:
    """Per-alpha mean/std/min/max of the index across same-strategy trials."""
    if not reports:
        raise ParameterError("need at least one report")
    if len({r.strategy for r in reports}) != 1:
        raise ParameterError("cannot aggregate across different strategies")
    alphas = list(reports[0].subindexes)
    out = {}
    for alpha in alphas:
        vals = np.array([r.subindexes[alpha] for r in reports])
        out[alpha] = {
            "mean": float(vals.mean()),
            "std": float(vals.std()),
            "min": float(vals.min()),
            "max": float(vals.max()),
        }
    return out
