"""Command line interface.

    netvuln run --input graph.txt --attacks rn-edge,id-node --trials 5 \
        --seed 42 --alphas 0.2,0.5,0.7,1.0 --emit-curves --out results/
    netvuln run --generate ws:n=1000,k=10,p=0.02 --attacks rn-edge --out results/
    netvuln inspect --input graph.txt

Exit codes: 0 success, 2 validation/parameter error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from . import attacks
from .errors import IntegrityError, ParameterError, ParseError, ValidationError
from .io import RunConfig, load_graph, run_campaign, write_results
from .robustness import DEFAULT_ALPHAS


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="netvuln")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="execute an attack campaign")
    src = run.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", help="edge-list file")
    src.add_argument("--generate", help="generator spec, e.g. ws:n=1000,k=10,p=0.02")
    run.add_argument(
        "--attacks",
        default=",".join(attacks.STRATEGY_NAMES),
        help="comma-separated strategies: " + ", ".join(attacks.STRATEGY_NAMES),
    )
    run.add_argument("--trials", type=int, default=1)
    run.add_argument("--seed", type=int, default=0)
    run.add_argument(
        "--alphas", default=",".join(str(a) for a in DEFAULT_ALPHAS),
        help="comma-separated removal fractions in (0,1]",
    )
    run.add_argument(
        "--paper-compat", action=argparse.BooleanOptionalAction, default=True,
        help="clamp the terminal curve point to 0 (default on)",
    )
    run.add_argument(
        "--exact", action="store_true",
        help="integrate the curve to exactly alpha instead of ceil(alpha*E) steps",
    )
    run.add_argument("--emit-curves", action="store_true")
    run.add_argument("--workers", type=int, default=1)
    run.add_argument("--out", required=True, help="output directory")

    inspect = sub.add_parser("inspect", help="print node/edge counts and mean degree")
    inspect.add_argument("--input", required=True)
    return parser


def _cmd_run(args) -> int:
    config = RunConfig(
        input_path=args.input,
        generate=args.generate,
        strategies=[s for s in args.attacks.split(",") if s],
        trials=args.trials,
        seed=args.seed,
        alphas=[float(a) for a in args.alphas.split(",") if a],
        paper_compat=args.paper_compat,
        exact=args.exact,
        emit_curves=args.emit_curves,
        out_dir=args.out,
        workers=args.workers,
    )
    record = run_campaign(config)
    files = write_results(record, args.out)
    print(f"{record.name}: N={record.n} E={record.e} "
          f"mean degree {record.mean_degree:.2f}")
    for path in files:
        print(f"wrote {path}")
    return 0


def _cmd_inspect(args) -> int:
    config = RunConfig(input_path=args.input)
    name, g = load_graph(config)
    print(f"network: {name}")
    print(f"nodes: {g.n}")
    print(f"edges: {g.num_edges}")
    print(f"mean degree: {2 * g.num_edges / g.n:.2f}")
    return 0


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        if args.command == "run":
            return _cmd_run(args)
        return _cmd_inspect(args)
    except (ParameterError, ParseError, ValidationError, IntegrityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
