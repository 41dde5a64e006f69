"""Command-line driver: analyze datasets, generate synthetic ones, serve bundles.

    iconviz analyze  --nodes nodes.csv --edges edges.csv --out bundle/
    iconviz generate --spec spec.json --out data/ --seed 42
    iconviz serve    --data bundle/ --port 8800

Log level comes from the ICONVIZ_LOG environment variable (DEBUG/INFO/
WARNING/ERROR, default WARNING). Exit codes: 0 success, 2 bad input or
module error, 3 port bind failure.
"""

from __future__ import annotations

import argparse
import logging
import os
import socket
import sys
from pathlib import Path

from .bundle import AnalysisConfig, analyze_files, load_bundle, write_bundle
from .errors import IconvizError
from .ingest import validate_dataset
from .synth import generate, scale_profile, spec_from_json, write_generated

log = logging.getLogger("iconviz.cli")


def _configure_logging() -> None:
    level = os.environ.get("ICONVIZ_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")


def _parse_sigma(value: str) -> float | None:
    if value == "auto":
        return None
    try:
        sigma = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--sigma expects 'auto' or a positive number, got {value!r}")
    if sigma <= 0:
        raise argparse.ArgumentTypeError("--sigma must be positive")
    return sigma


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="iconviz", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="run the full analysis pipeline into a bundle directory")
    analyze.add_argument("--nodes", required=True, help="node table CSV")
    analyze.add_argument("--edges", required=True, help="edge table CSV")
    analyze.add_argument("--out", required=True, help="bundle output directory")
    analyze.add_argument("--k", type=int, default=8, help="cluster count override (default 8)")
    analyze.add_argument("--sigma", type=_parse_sigma, default=None,
                         help="Gaussian bandwidth, or 'auto' for the median heuristic (default)")
    analyze.add_argument("--seed", type=int, default=0, help="k-means seed")
    analyze.add_argument("--spectral-max-chains", type=int, default=2000,
                         help="skip the spectral stage above this many chains")

    gen = sub.add_parser("generate", help="write a synthetic dataset with planted motifs")
    gen.add_argument("--spec", required=True, help="generator spec JSON")
    gen.add_argument("--out", required=True, help="dataset output directory")
    gen.add_argument("--seed", type=int, default=None, help="override the spec seed")

    serve = sub.add_parser("serve", help="serve an analyzed bundle over HTTP")
    serve.add_argument("--data", required=True, help="bundle directory from `iconviz analyze`")
    serve.add_argument("--port", type=int, required=True)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--static", default=None, help="optional console asset directory to mount at /")

    return parser


def cmd_analyze(args: argparse.Namespace) -> int:
    for label, path in (("node", args.nodes), ("edge", args.edges)):
        if not Path(path).is_file():
            print(f"error: {label} table not found: {path}", file=sys.stderr)
            return 2
    config = AnalysisConfig(
        k=args.k,
        sigma=args.sigma,
        seed=args.seed,
        spectral_max_chains=args.spectral_max_chains,
    )
    bundle = analyze_files(args.nodes, args.edges, config)
    report = validate_dataset(bundle.dataset)
    write_bundle(bundle, args.out)
    counts = bundle.snapshot["counts"]
    print(
        f"analyzed {report.nodes} corporations / {report.edges} edges -> "
        f"{counts['networks']} networks, {counts['chains']} chains; bundle at {args.out}"
    )
    return 0


def cmd_generate(args: argparse.Namespace) -> int:
    spec = spec_from_json(args.spec, seed_override=args.seed)
    ds, ground_truth = generate(spec)
    write_generated(ds, ground_truth, args.out)
    report = scale_profile(spec)
    scale_note = " (paper-scale)" if report.paper_scale else ""
    print(
        f"generated {len(ds.corporations)} corporations / {len(ds.edges)} edges "
        f"from {report.expected_motifs} motifs into {args.out}{scale_note}"
    )
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .server import create_app

    bundle = load_bundle(args.data)
    app = create_app(bundle, static_dir=args.static)
    try:
        probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
        probe.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
        probe.bind((args.host, args.port))
        probe.close()
    except OSError as exc:
        print(f"error: cannot bind {args.host}:{args.port}: {exc}", file=sys.stderr)
        return 3
    log.info("serving bundle %s on %s:%d", args.data, args.host, args.port)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def main(argv: list[str] | None = None) -> int:
    _configure_logging()
    args = build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            return cmd_analyze(args)
        if args.command == "generate":
            return cmd_generate(args)
        if args.command == "serve":
            return cmd_serve(args)
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except IconvizError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
