"""Edge-list ingestion, campaign orchestration, and result emission."""

from __future__ import annotations

import json
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, asdict
from pathlib import Path
from typing import Iterable, TextIO

from . import attacks, robustness
from .errors import ParameterError, ParseError, ValidationError
from .generators import WsParams, generate_ws
from .graph import Graph, giant_component_size
from .rng import generation_seed, trial_seeds


def parse_edge_list(stream: TextIO | Iterable[str]) -> Graph:
    """Two whitespace-separated labels per line; '#' and blank lines ignored.

    Labels are mapped to dense integer ids in first-seen order; the mapping
    is kept on the graph. Self-loops and duplicate edges are rejected with
    their line numbers.
    """
    ids: dict[str, int] = {}
    raw: list[tuple[int, int, int]] = []  # (line_no, u, v)
    for line_no, line in enumerate(stream, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ParseError(f"expected two node labels, got {len(parts)}", line_no)
        u, v = (ids.setdefault(p, len(ids)) for p in parts)
        raw.append((line_no, u, v))
    if not ids:
        raise ParseError("edge list contains no data lines")
    labels = sorted(ids, key=ids.get)
    g = Graph(len(ids), labels=labels)
    bad: list[str] = []
    for line_no, u, v in raw:
        if u == v:
            bad.append(f"line {line_no}: self-loop on {labels[u]!r}")
            continue
        if g.has_edge(u, v):
            bad.append(f"line {line_no}: duplicate edge {labels[u]!r} {labels[v]!r}")
            continue
        g.add_edge(u, v)
    if bad:
        raise ValidationError("invalid edge list: " + "; ".join(bad))
    return g


def serialize_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list (edge order is the sorted edge set)."""
    labels = g.labels if g.labels is not None else [str(i) for i in g.nodes]
    return "".join(f"{labels[u]} {labels[v]}\n" for u, v in g.edges())


def parse_generator_spec(spec: str) -> WsParams:
    """'ws:n=1000,k=10,p=0.02' -> WsParams (seed filled in by the campaign)."""
    kind, _, rest = spec.partition(":")
    if kind != "ws":
        raise ParameterError(f"unknown generator {kind!r}")
    try:
        kv = dict(item.split("=", 1) for item in rest.split(",") if item)
        params = WsParams(n=int(kv.pop("n")), k=int(kv.pop("k")), p=float(kv.pop("p")))
    except (KeyError, ValueError) as exc:
        raise ParameterError(f"bad generator spec {spec!r}: {exc}") from exc
    if kv:
        raise ParameterError(f"unknown generator parameters: {sorted(kv)}")
    params.validate()
    return params


@dataclass
class RunConfig:
    input_path: str | None = None
    generate: str | None = None
    strategies: list[str] = field(default_factory=lambda: list(attacks.STRATEGY_NAMES))
    trials: int = 1
    seed: int = 0
    alphas: list[float] = field(default_factory=lambda: list(robustness.DEFAULT_ALPHAS))
    paper_compat: bool = True
    exact: bool = False
    emit_curves: bool = False
    out_dir: str | None = None
    workers: int = 1

    def validate(self) -> None:
        if (self.input_path is None) == (self.generate is None):
            raise ParameterError("exactly one of input_path or generate is required")
        if self.trials < 1:
            raise ParameterError("trials must be >= 1")
        if not self.strategies:
            raise ParameterError("at least one strategy is required")
        for name in self.strategies:
            if name not in attacks.STRATEGY_NAMES:
                raise ParameterError(f"unknown strategy {name!r}")
        if not self.alphas or any(
            a2 <= a1 for a1, a2 in zip(self.alphas, self.alphas[1:])
        ):
            raise ParameterError("alphas must be strictly increasing")
        if not all(0.0 < a <= 1.0 for a in self.alphas):
            raise ParameterError("alphas must lie in (0, 1]")
        if self.workers < 1:
            raise ParameterError("workers must be >= 1")


@dataclass
class ResultRecord:
    name: str
    n: int
    e: int
    mean_degree: float
    config: RunConfig
    reports: list[robustness.RobustnessReport]
    curves: dict[tuple[str, int], robustness.PerformanceCurve]
    aggregates: dict[str, dict[float, dict[str, float]]]


def load_graph(config: RunConfig) -> tuple[str, Graph]:
    if config.generate is not None:
        params = parse_generator_spec(config.generate)
        name = f"ws_n{params.n}_k{params.k}_p{params.p:g}"  # CSV-safe, no commas
        params = WsParams(params.n, params.k, params.p, seed=generation_seed(config.seed))
        return name, generate_ws(params)
    path = Path(config.input_path)
    with path.open() as fh:
        return path.stem, parse_edge_list(fh)


# worker-process state, set once per pool by _init_worker
_STATE: dict = {}


def _init_worker(graph, scores_by_strategy, config):
    _STATE["graph"] = graph
    _STATE["scores"] = scores_by_strategy
    _STATE["config"] = config


def _run_trial(sidx: int, trial: int):
    g: Graph = _STATE["graph"]
    config: RunConfig = _STATE["config"]
    name = config.strategies[sidx]
    strategy = attacks.STRATEGY_NAMES[name]
    plan_seed, exec_seed = trial_seeds(config.seed, sidx, trial)
    plan = attacks.plan_attack(g, strategy, plan_seed, _STATE["scores"][sidx])
    if strategy.target == "edge":
        trace = attacks.execute_edge_attack(g, plan)
    else:
        trace = attacks.execute_node_attack(g, plan, exec_seed)
    curve = attacks.interpolate_trace(trace, g.n, g.num_edges)
    report = robustness.build_report(
        curve, config.alphas, name, trial, config.seed,
        paper_compat=config.paper_compat, exact=config.exact,
    )
    return sidx, trial, report, curve if config.emit_curves else None


def run_campaign(config: RunConfig) -> ResultRecord:
    """Plan, execute, and index every (strategy, trial) pair.

    Trials run in parallel when workers > 1; output ordering and all seeds
    are derived deterministically, so results are identical either way.
    """
    config.validate()
    name, g = load_graph(config)
    if giant_component_size(g) < g.n:
        warnings.warn(f"input graph {name!r} is disconnected; s_0 < 1")
    scores = [
        attacks.initial_scores(g, attacks.STRATEGY_NAMES[s]) for s in config.strategies
    ]
    tasks = [(si, t) for si in range(len(config.strategies)) for t in range(config.trials)]
    if config.workers > 1:
        with ProcessPoolExecutor(
            max_workers=config.workers,
            initializer=_init_worker,
            initargs=(g, scores, config),
        ) as pool:
            results = list(pool.map(_run_trial, *zip(*tasks)))
    else:
        _init_worker(g, scores, config)
        results = [_run_trial(si, t) for si, t in tasks]
    results.sort(key=lambda r: (r[0], r[1]))

    reports = [r[2] for r in results]
    curves = {
        (config.strategies[si], t): c for si, t, _, c in results if c is not None
    }
    aggregates = {}
    for si, sname in enumerate(config.strategies):
        group = [r[2] for r in results if r[0] == si]
        aggregates[sname] = robustness.aggregate_trials(group)
    return ResultRecord(
        name=name,
        n=g.n,
        e=g.num_edges,
        mean_degree=2 * g.num_edges / g.n,
        config=config,
        reports=reports,
        curves=curves,
        aggregates=aggregates,
    )


def _sig6(x: float) -> str:
    return format(x, ".6g")


def write_results(record: ResultRecord, out_dir: str | Path) -> list[Path]:
    """Emit indexes.csv, optional curves/*.csv, and summary.json."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    written = []

    idx_path = out / "indexes.csv"
    with idx_path.open("w", newline="") as fh:
        fh.write("network,strategy,trial,alpha,area,index,verdict\n")
        for rep in record.reports:
            for alpha in record.config.alphas:
                fh.write(
                    f"{record.name},{rep.strategy},{rep.trial},{_sig6(alpha)},"
                    f"{_sig6(rep.areas[alpha])},{rep.subindexes[alpha]:.3f},"
                    f"{rep.verdicts[alpha]}\n"
                )
    written.append(idx_path)

    if record.curves:
        curve_dir = out / "curves"
        curve_dir.mkdir(exist_ok=True)
        for (sname, trial), curve in sorted(record.curves.items()):
            path = curve_dir / f"{sname}-{trial}.csv"
            with path.open("w", newline="") as fh:
                fh.write("removed_edges,r,s\n")
                for i, s in enumerate(curve.s):
                    fh.write(f"{i},{_sig6(i / curve.e)},{_sig6(s)}\n")
            written.append(path)

    summary = {
        "network": {
            "name": record.name,
            "nodes": record.n,
            "edges": record.e,
            "mean_degree": float(_sig6(record.mean_degree)),
        },
        "config": asdict(record.config),
        "strategies": {
            sname: {
                _sig6(alpha): {k: float(_sig6(v)) for k, v in stats.items()}
                for alpha, stats in agg.items()
            }
            for sname, agg in record.aggregates.items()
        },
    }
    summary_path = out / "summary.json"
    with summary_path.open("w") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
        fh.write("\n")
    written.append(summary_path)
    return written
