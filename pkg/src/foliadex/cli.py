"""Command-line interface.

Exit codes: 0 on success (and on a verify run with no failures), 1 for
input errors and verify runs with failures, 2 for requests outside the
supported constructions.  Output format is chosen by --out (json, csv
or table), defaulting to the FOLIADEX_OUT environment variable and then
to table.  All output is byte-deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Optional, Sequence

from . import __version__
from .catalog import (
    SCHEMA_VERSION,
    export_catalog,
    import_catalog,
    record_to_json,
    standard_catalog,
)
from .errors import DomainError, ParseError, UnsupportedRequest
from .lattice import parse_rational, render_rational
from .oracle import kernel_backend
from .report import CheckStatus, SweepReport
from .synthesis import ExampleRecord, SynthesisRequest, SynthKind, synthesize
from .tables import FAMILY_PARAMS, parse_range, table_rows
from .verification import (
    EmptyGrid,
    OracleGrid,
    StandardGrid,
    SynthGrid,
    run_sweep,
    verify_catalog,
)

FORMATS = ("json", "csv", "table")


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad usage; the contract here is 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _resolve_format(value: Optional[str]) -> str:
    fmt = value if value is not None else os.environ.get("FOLIADEX_OUT") or "table"
    if fmt not in FORMATS:
        raise DomainError(
            f"unknown output format {fmt!r}; expected one of {', '.join(FORMATS)}"
        )
    return fmt


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _aligned(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    table = [list(header)] + [list(row) for row in rows]
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in table]
    return "\n".join(lines)


def _variety_label(variety) -> str:
    label = variety.label
    return label() if callable(label) else label


def _opt(value, blank: str = "") -> str:
    return blank if value is None else render_rational(value)


# ---------------------------------------------------------------------------
# synth


def _record_summary_pairs(record: ExampleRecord) -> list[tuple[str, str]]:
    fol = record.foliation
    inv = record.invariants
    flags = inv.positivity
    shown = [name for name in ("pseff", "big", "nef", "ample") if getattr(flags, name)]
    counts = {status: 0 for status in CheckStatus}
    for check in record.checks:
        counts[check.status] += 1
    return [
        ("id", record.id),
        ("branch", record.branch),
        ("variety", _variety_label(record.variety)),
        ("rank", f"{fol.rank} (algebraic {fol.algebraic_rank})"),
        ("canonical", str(fol.canonical)),
        ("gen_index", _opt(inv.gen_index, "-")),
        ("fano_index", _opt(inv.fano_index, "-")),
        ("seshadri_antican", _opt(inv.seshadri_antican, "-")),
        ("positivity", " ".join(shown) if shown else "none"),
        ("leaf_rc", fol.leaf_rc.value),
        (
            "checks",
            f"{counts[CheckStatus.PASS]} pass, {counts[CheckStatus.FAIL]} fail, "
            f"{counts[CheckStatus.SKIP]} skip",
        ),
    ]


def _render_record(record: ExampleRecord, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record_to_json(record), indent=2)
    pairs = _record_summary_pairs(record)
    if fmt == "csv":
        return _csv_text([k for k, _ in pairs], [[v for _, v in pairs]]).rstrip("\n")
    width = max(len(k) for k, _ in pairs)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in pairs)


def cmd_synth(args) -> int:
    fmt = _resolve_format(args.out)
    kind = SynthKind.from_text(args.kind)
    request = SynthesisRequest(kind, args.n, args.r, parse_rational(args.c))
    record = synthesize(request)
    print(_render_record(record, fmt))
    return 0


# ---------------------------------------------------------------------------
# verify


def _render_report(report: SweepReport, fmt: str, source: str) -> str:
    if fmt == "json":
        return json.dumps({"source": source, **report.to_dict()}, indent=2)
    if fmt == "csv":
        rows = [[f["record"], f["check"], f["detail"]] for f in report.failures]
        return _csv_text(["record", "check", "detail"], rows).rstrip("\n")
    lines = [
        f"source   {source}",
        f"total    {report.total}",
        f"passed   {report.passed}",
        f"failed   {report.failed}",
        f"skipped  {report.skipped}",
    ]
    for failure in report.failures:
        lines.append(
            f"FAIL {failure['record']} [{failure['check']}]: {failure['detail']}"
        )
    return "\n".join(lines)


def cmd_verify(args) -> int:
    fmt = _resolve_format(args.out)
    if args.catalog is not None:
        with open(args.catalog, "r", encoding="utf-8") as handle:
            catalog = import_catalog(handle.read())
        report = verify_catalog(catalog.records)
        source = f"catalog {args.catalog}"
    else:
        if args.grid == "standard":
            grid = StandardGrid()
        elif args.grid == "oracle":
            grid = OracleGrid(
                m_max=args.m_max,
                b1_max=args.b1_max,
                rprime_max=args.rprime_max,
                k_max=args.k_max,
                coeff_max=args.coeff_max,
                d_max=args.d_max,
                c_max=args.c_max,
            )
        elif args.grid == "synth":
            if args.kind is None:
                raise DomainError("--grid synth needs --kind")
            grid = SynthGrid(
                kind=SynthKind.from_text(args.kind),
                n_max=args.n_max,
                q_max=args.q_max,
            )
        else:
            grid = EmptyGrid()
        report = run_sweep(grid)
        source = f"grid {args.grid}"
    print(_render_report(report, fmt, source))
    return 0 if report.ok else 1


# ---------------------------------------------------------------------------
# table

_RANGE_OPTIONS = (
    "a",
    "n",
    "r",
    "m",
    "mprime",
    "a1",
    "a2",
    "base_dim",
    "rprime",
    "d",
    "p",
    "q",
)

_INVARIANT_COLUMNS = (
    "anticanonical",
    "gen_index",
    "fano_index",
    "seshadri",
    "algebraic_rank",
)


def _row_values(row) -> dict:
    inv = row.record.invariants
    fol = row.record.foliation
    return {
        **row.params,
        "anticanonical": str(-fol.canonical),
        "gen_index": inv.gen_index,
        "fano_index": inv.fano_index,
        "seshadri": inv.seshadri_antican,
        "algebraic_rank": fol.algebraic_rank,
    }


def cmd_table(args) -> int:
    fmt = _resolve_format(args.out)
    ranges = {}
    for name in _RANGE_OPTIONS:
        value = getattr(args, name)
        if value is not None:
            ranges[name] = parse_range(value)
    rows = table_rows(args.family, ranges)
    columns = list(FAMILY_PARAMS[args.family]) + list(_INVARIANT_COLUMNS)
    if fmt == "json":
        payload = []
        for row in rows:
            values = _row_values(row)
            entry = {}
            for col in columns:
                value = values[col]
                if col in ("gen_index", "fano_index", "seshadri"):
                    entry[col] = None if value is None else render_rational(value)
                else:
                    entry[col] = value
            entry["id"] = row.record.id
            payload.append(entry)
        return_text = json.dumps(
            {"family": args.family, "columns": columns, "rows": payload}, indent=2
        )
        print(return_text)
        return 0
    text_rows = []
    for row in rows:
        values = _row_values(row)
        rendered = []
        for col in columns:
            value = values[col]
            if col in ("gen_index", "fano_index", "seshadri"):
                rendered.append(_opt(value))
            else:
                rendered.append(str(value))
        text_rows.append(rendered)
    if fmt == "csv":
        print(_csv_text(columns, text_rows).rstrip("\n"))
    else:
        print(_aligned(columns, text_rows))
    return 0


# ---------------------------------------------------------------------------
# info and catalog


def cmd_info(args) -> int:
    fmt = _resolve_format(args.out)
    families = sorted(FAMILY_PARAMS)
    kinds = [kind.value for kind in SynthKind]
    if fmt == "json":
        print(
            json.dumps(
                {
                    "name": "foliadex",
                    "version": __version__,
                    "kernel_backend": kernel_backend(),
                    "schema_version": SCHEMA_VERSION,
                    "table_families": families,
                    "synth_kinds": kinds,
                },
                indent=2,
            )
        )
        return 0
    pairs = [
        ("name", "foliadex"),
        ("version", __version__),
        ("kernel_backend", kernel_backend()),
        ("schema_version", SCHEMA_VERSION),
        ("table_families", ", ".join(families)),
        ("synth_kinds", ", ".join(kinds)),
    ]
    if fmt == "csv":
        print(_csv_text([k for k, _ in pairs], [[v for _, v in pairs]]).rstrip("\n"))
        return 0
    width = max(len(k) for k, _ in pairs)
    print("\n".join(f"{k.ljust(width)}  {v}" for k, v in pairs))
    return 0


def cmd_catalog_export(args) -> int:
    text = export_catalog(standard_catalog())
    if args.out_file is None:
        sys.stdout.write(text)
    else:
        with open(args.out_file, "w", encoding="utf-8") as handle:
            handle.write(text)
    return 0


def cmd_catalog_import(args) -> int:
    with open(args.in_file, "r", encoding="utf-8") as handle:
        catalog = import_catalog(handle.read())
    if args.out_file is None:
        print(f"imported {len(catalog.records)} records (schema {SCHEMA_VERSION})")
    else:
        with open(args.out_file, "w", encoding="utf-8") as handle:
            handle.write(export_catalog(catalog))
    return 0


# ---------------------------------------------------------------------------
# Parser assembly.


def _add_out(parser) -> None:
    parser.add_argument(
        "--out",
        choices=FORMATS,
        default=None,
        help="output format (default: FOLIADEX_OUT or table)",
    )


def build_parser() -> _Parser:
    parser = _Parser(
        prog="foliadex",
        description="exact invariants of foliated projective bundles, cones "
        "and weighted projective spaces",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    synth = sub.add_parser("synth", help="build a record hitting a target invariant")
    synth.add_argument("--kind", required=True, help="generalized-index, fano-index or seshadri")
    synth.add_argument("--n", type=int, required=True, help="ambient dimension")
    synth.add_argument("--r", type=int, required=True, help="algebraic rank")
    synth.add_argument("--c", required=True, help="target value, e.g. 3/2")
    _add_out(synth)
    synth.set_defaults(func=cmd_synth)

    verify = sub.add_parser("verify", help="run a verification sweep")
    verify.add_argument(
        "--grid",
        choices=("standard", "oracle", "synth", "empty"),
        default="standard",
    )
    verify.add_argument("--catalog", default=None, help="verify an exported catalog file")
    verify.add_argument("--m-max", type=int, default=4)
    verify.add_argument("--b1-max", type=int, default=3)
    verify.add_argument("--rprime-max", type=int, default=3)
    verify.add_argument("--k-max", type=int, default=3)
    verify.add_argument("--coeff-max", type=int, default=6)
    verify.add_argument("--d-max", type=int, default=6)
    verify.add_argument("--c-max", type=int, default=40)
    verify.add_argument("--kind", default=None, help="synthesis kind for --grid synth")
    verify.add_argument("--n-max", type=int, default=4)
    verify.add_argument("--q-max", type=int, default=6)
    _add_out(verify)
    verify.set_defaults(func=cmd_verify)

    table = sub.add_parser("table", help="tabulate a parametric family")
    table.add_argument("--family", required=True)
    table.add_argument("--a")
    table.add_argument("--n")
    table.add_argument("--r")
    table.add_argument("--m")
    table.add_argument("--mprime")
    table.add_argument("--a1")
    table.add_argument("--a2")
    table.add_argument("--base-dim", default="2")
    table.add_argument("--rprime")
    table.add_argument("--d")
    table.add_argument("--p")
    table.add_argument("--q")
    _add_out(table)
    table.set_defaults(func=cmd_table)

    info = sub.add_parser("info", help="package, backend and schema information")
    _add_out(info)
    info.set_defaults(func=cmd_info)

    cat = sub.add_parser("catalog", help="export or import the record catalog")
    cat_sub = cat.add_subparsers(dest="catalog_command", required=True)
    cat_export = cat_sub.add_parser("export", help="write the standard catalog as JSON")
    cat_export.add_argument("--out-file", default=None, help="path (default: stdout)")
    cat_export.set_defaults(func=cmd_catalog_export)
    cat_import = cat_sub.add_parser("import", help="read a catalog JSON file")
    cat_import.add_argument("--in", dest="in_file", required=True, help="path to read")
    cat_import.add_argument(
        "--out-file", default=None, help="re-export to this path after validation"
    )
    cat_import.set_defaults(func=cmd_catalog_import)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits directly on usage errors (and --help); keep the
        # function total so embedders get a return code either way
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args)
    except UnsupportedRequest as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return 2
    except (ParseError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
