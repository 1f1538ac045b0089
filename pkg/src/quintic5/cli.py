"""Command-line interface.

Subcommands: classify one radicand, enumerate a range with filters,
re-verify the embedded reference tables, sweep the congruence splitting
law against the brute-force oracle, and re-emit one reference table.
"""

from __future__ import annotations

import argparse
import json
import sys

from .arith import cyclotomic_splitting_oracle
from .classify import classify
from .quintic import FormClass, associate_value, splitting
from .tables import _small_primes, emit_table, enumerate_classified, verify_fixtures

_ENUM_COLUMNS = (
    "n",
    "canonical_n",
    "form",
    "predicted_rank",
    "d",
    "q_star",
    "zeta_norm",
    "lambda_ramified",
    "conjecture_cyclic",
    "associate_t",
    "rank_low",
    "rank_high",
)

_FORM_NAMES = [form.value for form in FormClass]


def _cell(value) -> str:
    if value is None:
        return ""
    if value is True:
        return "true"
    if value is False:
        return "false"
    return str(value)


def _record_cells(record: dict) -> list[str]:
    bounds = record.get("rank_bounds", (None, None))
    cells = [
        record["n"],
        record["canonical_n"],
        record["form"],
        record["predicted_rank"],
        record["d"],
        record["q_star"],
        record["zeta_norm"],
        record["lambda_ramified"],
        record["conjecture_cyclic"],
        record["associate_t"],
        bounds[0],
        bounds[1],
    ]
    return [_cell(c) for c in cells]


def _enum_records(args):
    form = FormClass(args.form) if args.form else None
    for cls in enumerate_classified(args.max, form=form, rank=args.rank):
        if args.raw:
            for t in (1, 2, 3, 4):
                record = cls.as_json_dict()
                record["t"] = t
                record["n"] = associate_value(cls.radicand.factors, t)
                yield record
        else:
            yield cls.as_json_dict()


def _cmd_enumerate(args) -> int:
    out = sys.stdout
    columns = (("t",) if args.raw else ()) + _ENUM_COLUMNS
    if args.format == "json":
        out.write(json.dumps(list(_enum_records(args)), indent=2))
        out.write("\n")
        return 0
    if args.format == "csv":
        out.write(",".join(columns) + "\n")
        for record in _enum_records(args):
            cells = ([_cell(record["t"])] if args.raw else []) + _record_cells(record)
            out.write(",".join(cells) + "\n")
        return 0
    out.write("| " + " | ".join(columns) + " |\n")
    out.write("|" + "|".join(" --- " for _ in columns) + "|\n")
    for record in _enum_records(args):
        cells = ([_cell(record["t"])] if args.raw else []) + _record_cells(record)
        out.write("| " + " | ".join(cells) + " |\n")
    return 0


def _cmd_classify(args) -> int:
    print(json.dumps(classify(args.n).as_json_dict(), indent=2))
    return 0


def _cmd_verify(args) -> int:
    reports = verify_fixtures()
    total = 108
    for rep in reports:
        print(f"{rep.table_id} row {rep.row} [{rep.label}]: {rep.kind}: {json.dumps(rep.evidence)}")
    print(f"{len(reports)} of {total} rows flagged; {total - len(reports)} rows confirmed.")
    return 0


def _cmd_oracle_check(args) -> int:
    checked = 0
    mismatches = 0
    for p in _small_primes(args.max_prime):
        if p == 5:
            continue
        law = splitting(p)
        oracle = cyclotomic_splitting_oracle(p)
        checked += 1
        if law != oracle:
            mismatches += 1
            print(f"mismatch at p={p}: law {law} != oracle {oracle}", file=sys.stderr)
    print(f"splitting law vs oracle: {checked} primes checked up to {args.max_prime}, {mismatches} mismatches")
    return 1 if mismatches else 0


def _cmd_emit_table(args) -> int:
    doc = emit_table(FormClass(args.form), args.max, args.format)
    sys.stdout.write(doc if doc.endswith("\n") else doc + "\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quintic5",
        description=(
            "Predict the rank of the ambiguous 5-class group of the normal "
            "closure of a pure quintic field from the radicand's factorization."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="classify one radicand, print a JSON record")
    p_classify.add_argument("n", type=int, help="radicand (5th-power-free integer >= 2)")
    p_classify.set_defaults(func=_cmd_classify)

    p_enum = sub.add_parser("enumerate", help="classify every 5th-power-free n up to a bound")
    p_enum.add_argument("--max", type=int, required=True, help="upper bound (inclusive)")
    p_enum.add_argument("--rank", type=int, choices=(1, 2), help="keep only this predicted rank")
    p_enum.add_argument("--form", choices=_FORM_NAMES, help="keep only this form")
    p_enum.add_argument("--format", choices=("csv", "md", "json"), default="csv")
    p_enum.add_argument(
        "--raw",
        action="store_true",
        help="list all four associate radicands of each field, not just the canonical one",
    )
    p_enum.set_defaults(func=_cmd_enumerate)

    p_verify = sub.add_parser(
        "verify-paper-tables",
        help="recheck the embedded reference tables and report inconsistent rows",
    )
    p_verify.set_defaults(func=_cmd_verify)

    p_oracle = sub.add_parser(
        "oracle-check",
        help="compare the congruence splitting law with the brute-force oracle",
    )
    p_oracle.add_argument("--max-prime", type=int, required=True)
    p_oracle.set_defaults(func=_cmd_oracle_check)

    p_emit = sub.add_parser("emit-table", help="re-derive one reference table up to a bound")
    p_emit.add_argument("--form", choices=[f.value for f in FormClass if f is not FormClass.NotCovered], required=True)
    p_emit.add_argument("--max", type=int, required=True, help="bound on the canonical radicand")
    p_emit.add_argument("--format", choices=("csv", "md", "json"), default="md")
    p_emit.set_defaults(func=_cmd_emit_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
