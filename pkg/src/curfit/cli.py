"""Command-line front end: batch fitting and launching the HTTP service.

Exit codes: 0 when at least one family fit, 2 for usage/selection mistakes,
1 for I/O errors, unusable data, or every family failing.
"""

from __future__ import annotations

import argparse
import errno
import json
import os
import socket
import sys

from .dataset import parse_csv, select_columns, split_dataset
from .errors import (
    AllFamiliesFailedError,
    CsvError,
    CurfitError,
    EmptyTrainError,
    SelectionError,
)
from .fitting import RankedModels, auto_train
from .models import MAX_POLY_ORDER
from .report import build_result_document, format_equation, plot_series

USAGE_EXIT = 2
FAILURE_EXIT = 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curfit",
        description="Fit six linear-regression model families and rank them by R².",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fit = sub.add_parser("fit", help="fit all families to a CSV file")
    fit.add_argument("--input", required=True, help="path to the CSV file")
    fit.add_argument(
        "--features",
        required=True,
        help="comma-separated feature column names",
    )
    fit.add_argument("--label", required=True, help="label column name")
    fit.add_argument(
        "--test-split",
        type=float,
        default=10.0,
        metavar="PCT",
        help="test share percentage in [0, 100) (default: 10)",
    )
    fit.add_argument("--seed", type=int, default=42, help="shuffle seed (default: 42)")
    fit.add_argument(
        "--order",
        type=int,
        default=2,
        help=f"polynomial order, 1..{MAX_POLY_ORDER} (default: 2)",
    )
    fit.add_argument(
        "--format",
        choices=("table", "document"),
        default="table",
        help="human table or JSON result document (default: table)",
    )
    fit.add_argument(
        "--plot-out",
        metavar="PATH",
        help="also write per-family plot series JSON to this path",
    )

    serve = sub.add_parser("serve", help="run the HTTP service and web UI")
    serve.add_argument(
        "--port",
        type=int,
        default=8080,
        help="port to bind; 0 picks an ephemeral port (default: 8080, "
        "overridden by CURFIT_PORT)",
    )
    serve.add_argument(
        "--host", default="127.0.0.1", help="address to bind (default: 127.0.0.1)"
    )
    serve.add_argument(
        "--static",
        metavar="DIR",
        help="directory of built web UI assets to serve at / "
        "(default: CURFIT_STATIC_DIR or none)",
    )
    return parser


def _split_feature_flag(raw: str) -> list[str]:
    names = [name.strip() for name in raw.split(",")]
    return [name for name in names if name != ""]


def _render_table(ranked: RankedModels, out) -> None:
    print(f"{'rank':<5}{'family':<13}{'equation':<58}{'train r²':<10}{'test r²'}", file=out)
    for rank, entry in enumerate(ranked.entries, start=1):
        if entry.succeeded:
            test = f"{entry.test.r2:.4f}" if entry.test is not None else "-"
            line = (
                f"{rank:<5}{entry.family.value:<13}"
                f"{format_equation(entry.model):<58}"
                f"{entry.train.r2:<10.4f}{test}"
            )
            if entry.error:
                line += f"  ({entry.error})"
        else:
            line = f"{rank:<5}{entry.family.value:<13}failed: {entry.error}"
        print(line, file=out)


def run_fit(args) -> int:
    features = _split_feature_flag(args.features)
    if not features:
        print("error: --features must name at least one column", file=sys.stderr)
        return USAGE_EXIT
    if not 0.0 <= args.test_split < 100.0:
        print("error: --test-split must be in [0, 100)", file=sys.stderr)
        return USAGE_EXIT
    if not 1 <= args.order <= MAX_POLY_ORDER:
        print(f"error: --order must be in 1..{MAX_POLY_ORDER}", file=sys.stderr)
        return USAGE_EXIT

    try:
        raw = open(args.input, "rb").read()
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
        return FAILURE_EXIT

    try:
        ds = parse_csv(raw)
        sel = select_columns(ds, features, args.label)
        split = split_dataset(ds, sel, args.test_split, args.seed)
        ranked = auto_train(split, order=args.order)
    except SelectionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except (CsvError, EmptyTrainError, AllFamiliesFailedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILURE_EXIT

    document = build_result_document(
        ranked,
        dataset_name=os.path.basename(args.input),
        rows=ds.n,
        dropped_rows=ds.dropped_row_count,
        feature_names=tuple(features),
        label_name=args.label,
        test_percent=args.test_split,
        seed=args.seed,
    )

    if args.format == "table":
        print(
            f"dataset: {document.dataset_name}  rows: {ds.n}  "
            f"dropped: {ds.dropped_row_count}  "
            f"split: {args.test_split:g}% test (seed {args.seed})"
        )
        _render_table(ranked, sys.stdout)
        if len(features) > 1:
            print(
                f"note: simple/polynomial/sinusoidal bind the first "
                f"selected feature: {features[0]!r}"
            )
    else:
        print(document.to_json())

    if args.plot_out:
        plots = {}
        for entry in ranked.entries:
            if entry.succeeded:
                series = plot_series(entry.model, split.train).payload()
                plots[entry.family.value] = {
                    "scatter": [list(p) for p in series.scatter],
                    "curve": [list(p) for p in series.curve],
                    "feature": series.feature_name,
                    "label": series.label_name,
                    "degenerate": series.degenerate,
                }
        try:
            with open(args.plot_out, "w", encoding="utf-8") as fh:
                json.dump(plots, fh)
        except OSError as exc:
            print(f"error: cannot write {args.plot_out}: {exc}", file=sys.stderr)
            return FAILURE_EXIT
    return 0


def run_serve(args) -> int:
    import uvicorn

    from .service import create_app

    port = args.port
    env_port = os.environ.get("CURFIT_PORT")
    if env_port is not None:
        try:
            port = int(env_port)
        except ValueError:
            print(f"error: CURFIT_PORT={env_port!r} is not an integer", file=sys.stderr)
            return USAGE_EXIT

    static_dir = args.static or os.environ.get("CURFIT_STATIC_DIR")
    app = create_app(static_dir=static_dir)

    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    try:
        sock.bind((args.host, port))
    except OSError as exc:
        sock.close()
        if exc.errno == errno.EADDRINUSE:
            print(f"error: port {port} is already in use", file=sys.stderr)
        else:
            print(f"error: cannot bind {args.host}:{port}: {exc}", file=sys.stderr)
        return FAILURE_EXIT
    bound_port = sock.getsockname()[1]
    print(f"curfit serving on http://{args.host}:{bound_port}", flush=True)

    config = uvicorn.Config(app, log_level="info", access_log=True)
    server = uvicorn.Server(config)
    server.run(sockets=[sock])
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "fit":
            return run_fit(args)
        return run_serve(args)
    except CurfitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILURE_EXIT


if __name__ == "__main__":
    sys.exit(main())
