import math

import numpy as np
import pytest

from netvuln.errors import ParameterError
from netvuln.graph import Graph
from netvuln.robustness import (
    DEFAULT_ALPHAS,
    PerformanceCurve,
    RobustnessReport,
    aggregate_trials,
    build_report,
    classify,
    compare_node_edge,
    curve_area,
    index_I1_fast,
    invulnerability_index,
)

from oracles import random_graph, riemann_index


def curve(values, n=100):
    return PerformanceCurve(np.asarray(values, dtype=float), n, len(values) - 1)


def baseline_curve(e, n=100):
    return curve([1.0 - i / e for i in range(e + 1)], n)


def random_unit_curve(rng, e):
    """Non-increasing curve with s_0 = 1 and s_E = 0."""
    interior = np.sort(rng.random(e - 1))[::-1]
    return curve([1.0] + list(interior) + [0.0])


# -- areas and indexes --------------------------------------------------------


def test_area_constant_curve_full_square():
    c = curve([1.0] * 5)
    assert curve_area(c, 1.0, paper_compat=False) == pytest.approx(1.0)


def test_area_baseline_is_half():
    assert curve_area(baseline_curve(10), 1.0) == pytest.approx(0.5)


def test_area_hand_trapezoid():
    c = curve([1.0, 1.0, 0.5, 0.25, 0.0])
    assert curve_area(c, 0.5) == pytest.approx(0.4375)


def test_area_rejects_bad_alpha():
    c = baseline_curve(4)
    for alpha in (0.0, -0.2, 1.5):
        with pytest.raises(ParameterError):
            curve_area(c, alpha)


def test_index_baseline_zero():
    assert invulnerability_index(baseline_curve(10), 1.0) == pytest.approx(0.0, abs=1e-15)


def test_index_hand_value():
    c = curve([1.0, 1.0, 0.5, 0.25, 0.0])
    assert invulnerability_index(c, 0.5) == pytest.approx(0.0625)


def test_index_instant_collapse():
    for e in (4, 10, 50):
        c = curve([1.0] + [0.0] * e)
        expected = 1.0 / (2 * e) - 0.5
        assert invulnerability_index(c, 1.0) == pytest.approx(expected)


def test_i1_fast_examples():
    assert index_I1_fast(baseline_curve(10)) == pytest.approx(0.0, abs=1e-15)
    c = curve([1.0, 1.0, 0.5, 0.25, 0.0])
    assert index_I1_fast(c) == pytest.approx(0.0625)
    assert index_I1_fast(curve([1.0, 0.5, 0.0])) == pytest.approx(0.0, abs=1e-15)


def test_i1_fast_equals_trapezoid_route():
    rng = np.random.default_rng(21)
    for _ in range(100):
        c = random_unit_curve(rng, int(rng.integers(2, 60)))
        assert index_I1_fast(c) == pytest.approx(
            invulnerability_index(c, 1.0), abs=1e-12
        )


def test_terminal_clamp_default_on():
    # curve ending at 1/N: compat mode treats the last sample as 0
    c = curve([1.0, 0.5, 0.01], n=100)
    compat = invulnerability_index(c, 1.0, paper_compat=True)
    raw = invulnerability_index(c, 1.0, paper_compat=False)
    assert raw - compat == pytest.approx(0.01 / (2 * 2))
    assert index_I1_fast(c) == pytest.approx(compat, abs=1e-12)


def test_index_matches_riemann_oracle():
    rng = np.random.default_rng(22)
    for _ in range(20):
        e = int(rng.integers(2, 40)) * 10  # keep alpha*E integral
        c = random_unit_curve(rng, e)
        for alpha in DEFAULT_ALPHAS:
            got = invulnerability_index(c, alpha)
            assert got == pytest.approx(riemann_index(c.s, e, alpha), abs=1e-6)


def test_pointwise_dominance_orders_indexes():
    rng = np.random.default_rng(23)
    for _ in range(20):
        e = int(rng.integers(3, 40))
        lo = random_unit_curve(rng, e)
        hi_vals = np.minimum(1.0, lo.s + rng.random() * 0.3)
        hi_vals[-1] = 0.0
        hi = curve(np.maximum.accumulate(hi_vals[::-1])[::-1])
        assert np.all(hi.s >= lo.s - 1e-12)
        for alpha in DEFAULT_ALPHAS:
            assert invulnerability_index(hi, alpha) >= invulnerability_index(lo, alpha) - 1e-12


def test_rigid_shift_changes_i1_by_c_times_fraction():
    rng = np.random.default_rng(24)
    e = 20
    base = random_unit_curve(rng, e)
    shifted_vals = base.s.copy()
    c_shift = 1e-3
    shifted_vals[1:-1] += c_shift  # interior points only
    shifted = curve(shifted_vals)
    delta = index_I1_fast(shifted) - index_I1_fast(base)
    assert delta == pytest.approx(c_shift * (e - 1) / e, abs=1e-12)


def test_exact_mode_partial_trapezoid():
    # E=4, alpha=0.3: exact integrates to 1.2 unit steps
    c = curve([1.0, 1.0, 0.5, 0.25, 0.0])
    a_exact = curve_area(c, 0.3, exact=True)
    full = (1.0 + 1.0) / 2
    s_12 = 1.0 + 0.2 * (0.5 - 1.0)
    partial = (1.0 + s_12) / 2 * 0.2
    assert a_exact == pytest.approx((full + partial) / 4)
    # default mode rounds up to 2 whole steps
    assert curve_area(c, 0.3) == pytest.approx(((1 + 1) / 2 + (1 + 0.5) / 2) / 4)


def test_exact_mode_baseline_neutral_at_any_alpha():
    c = baseline_curve(10)
    for alpha in (0.13, 0.37, 0.5, 0.91, 1.0):
        assert invulnerability_index(c, alpha, exact=True) == pytest.approx(0.0, abs=1e-12)


def test_index_range_invariant():
    rng = np.random.default_rng(25)
    for _ in range(50):
        c = random_unit_curve(rng, int(rng.integers(2, 50)))
        for alpha in DEFAULT_ALPHAS:
            assert -0.5 <= invulnerability_index(c, alpha) <= 0.5


# -- classification and reports -----------------------------------------------


def test_classify_signs():
    assert classify(0.286) == "robust"
    assert classify(-0.390) == "fragile"
    assert classify(0.0) == "neutral"


def test_build_report_fields():
    c = curve([1.0, 1.0, 0.5, 0.25, 0.0])
    rep = build_report(c, [0.5, 1.0], "id-edge", trial=2, seed=9)
    assert rep.subindexes[0.5] == pytest.approx(0.0625)
    assert rep.verdicts[0.5] == "robust"
    assert rep.areas[1.0] == pytest.approx(curve_area(c, 1.0))


def test_aggregate_trials():
    def rep(i1):
        r = RobustnessReport("rn-edge", 0, 0)
        r.subindexes[1.0] = i1
        return r

    single = aggregate_trials([rep(0.25)])
    assert single[1.0]["mean"] == pytest.approx(0.25)
    assert single[1.0]["std"] == 0.0
    two = aggregate_trials([rep(0.1), rep(0.3)])
    assert two[1.0]["mean"] == pytest.approx(0.2)
    assert two[1.0]["min"] == pytest.approx(0.1)
    with pytest.raises(ParameterError):
        aggregate_trials([])
    bad = rep(0.1)
    bad.strategy = "ib-edge"
    with pytest.raises(ParameterError):
        aggregate_trials([rep(0.2), bad])


def test_random_trials_have_spread():
    rng = np.random.default_rng(26)
    g = random_graph(rng, 30, 60)
    from netvuln.attacks import Strategy, execute_edge_attack, interpolate_trace, plan_attack

    reports = []
    for trial in range(10):
        plan = plan_attack(g, Strategy("edge", "random"), seed=trial)
        c = interpolate_trace(execute_edge_attack(g, plan), g.n, g.num_edges)
        reports.append(build_report(c, [1.0], "rn-edge", trial, trial))
    assert aggregate_trials(reports)[1.0]["std"] > 0.0


# -- node/edge transfer comparison ---------------------------------------------


def test_compare_node_edge_reports_both_sides():
    g = random_graph(np.random.default_rng(27), 25, 60)
    cmp = compare_node_edge(g, "initial-degree", seed=11)
    for alpha in DEFAULT_ALPHAS:
        assert -0.5 <= cmp.node_index[alpha] <= 0.5
        assert -0.5 <= cmp.edge_index[alpha] <= 0.5
        assert cmp.error(alpha) == pytest.approx(
            cmp.edge_index[alpha] - cmp.node_index[alpha]
        )
    assert cmp.max_abs_error() >= 0.0


def test_aligned_bundle_orders_give_zero_error():
    # with the same per-bundle edge orders and an edge curve that is linear
    # inside every bundle, the two curves coincide exactly: a star (center
    # first) and a perfect matching both have that shape
    from netvuln.attacks import (
        AttackPlan,
        execute_edge_attack,
        execute_node_attack,
        interpolate_trace,
        node_edge_transfer,
    )

    g_star = Graph(5, [(0, i) for i in range(1, 5)])
    g_match = Graph(6, [(0, 1), (2, 3), (4, 5)])
    for g, order in [(g_star, [0, 1, 2, 3, 4]), (g_match, [0, 2, 4, 1, 3, 5])]:
        plan = AttackPlan("node", order, g.fingerprint())
        node_curve = interpolate_trace(
            execute_node_attack(g, plan, seed=2), g.n, g.num_edges
        )
        edge_trace = execute_edge_attack(g, node_edge_transfer(g, plan, seed=2))
        edge_curve = interpolate_trace(edge_trace, g.n, g.num_edges)
        for alpha in DEFAULT_ALPHAS:
            node_i = invulnerability_index(node_curve, alpha)
            edge_i = invulnerability_index(edge_curve, alpha)
            assert node_i == pytest.approx(edge_i, abs=1e-12)
        assert math.isfinite(index_I1_fast(node_curve))
