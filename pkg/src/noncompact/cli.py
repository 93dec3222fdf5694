"""Command line runner.

Subcommands: interval, disc (witness protocol reports), index (extension
index ladder), sweep (singular-value sweeps).  Exit code 0 means every
verdict passed, 1 means a verdict failed, 2 means a configuration error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys


def _int_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {exc}")
    if not values:
        raise argparse.ArgumentTypeError("expected at least one integer")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="noncompact",
        description=(
            "Numerical evidence runner for non-compact spectral-projection "
            "compressions on the interval and disc models."
        ),
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help="cap the BLAS/LAPACK thread count",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for model in ("interval", "disc"):
        p = sub.add_parser(model, help=f"run the {model} witness protocol")
        p.add_argument(
            "--grid",
            type=_int_list,
            default=[100, 1000] if model == "disc" else [100, 1000, 10000],
            help="comma-separated witness grid",
        )
        p.add_argument("--trunc-factor", type=int, default=10)
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("index", help="extension index ladder")
    p.add_argument(
        "--grid",
        type=_int_list,
        default=list(range(-10, 11)),
        help="comma-separated list of boundary cuts N",
    )
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json", "csv"), default="csv")

    p = sub.add_parser("sweep", help="singular-value sweep on both models")
    p.add_argument(
        "--sizes",
        type=_int_list,
        default=[64, 256, 1024, 4096],
        help="comma-separated, strictly increasing compression sizes",
    )
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")


def _rows_to_csv_text(rows: list[dict]) -> str:
    import csv
    import io

    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()))
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0

    def config_error(message: str) -> int:
        sys.stderr.write(f"error: {message}\n")
        return 2

    if args.threads is not None:
        if args.threads < 1:
            return config_error("--threads must be >= 1")
        # Must happen before the numerical stack is imported.
        for var in ("OMP_NUM_THREADS", "OPENBLAS_NUM_THREADS", "MKL_NUM_THREADS"):
            os.environ[var] = str(args.threads)

    from . import analysis, aps

    if args.command in ("interval", "disc"):
        if any(g < 1 for g in args.grid):
            return config_error("--grid entries must be >= 1")
        report = analysis.witness_protocol(
            args.command, tuple(args.grid), trunc_factor=args.trunc_factor
        )
        if args.format == "csv":
            _emit(_rows_to_csv_text(analysis.witness_report_rows(report)), args.out)
        else:
            _emit(json.dumps(analysis.witness_report_dict(report), indent=2), args.out)
        return 0 if report.verdict == "pass" else 1

    if args.command == "index":
        rows = []
        ok = True
        for cut in args.grid:
            dim_plus, dim_minus = aps.aps_kernel_dims(cut)
            index = aps.aps_index(cut)
            ok = ok and (index == dim_plus - dim_minus == cut)
            rows.append(
                {
                    "N": cut,
                    "dim_plus": dim_plus,
                    "dim_minus": dim_minus,
                    "index": index,
                }
            )
        if args.format == "csv":
            _emit(_rows_to_csv_text(rows), args.out)
        else:
            _emit(json.dumps(rows, indent=2), args.out)
        return 0 if ok else 1

    # sweep
    if list(args.sizes) != sorted(set(args.sizes)):
        return config_error("--sizes must be strictly increasing")
    payloads = []
    ok = True
    for model in analysis.MODELS:
        profile = analysis.compression_sweep(model, tuple(args.sizes))
        ok = ok and analysis.nesting_monotone(profile)
        payloads.append(analysis.sweep_report_dict(profile))
    if args.format == "csv":
        rows = []
        for payload in payloads:
            for i, size in enumerate(payload["sizes"]):
                row = {"model": payload["model"], "size": size}
                for t, c in zip(payload["thresholds"], payload["counts"][i]):
                    row[f"count_ge_{t}"] = c
                for j, sv in enumerate(payload["sv"][i][:8]):
                    row[f"sv{j + 1}"] = sv
                rows.append(row)
        _emit(_rows_to_csv_text(rows), args.out)
    else:
        _emit(json.dumps(payloads, indent=2), args.out)
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
