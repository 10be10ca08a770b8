from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import (
    CUSTOM,
    FAMILIES,
    G3_CONVENTION_NOTE,
    PARAM_NAMES,
    JacobiFailure,
    Params,
    custom_algebra,
    format_rational,
    make_group,
    parse_rational,
)
from .collineation import solve_point
from .connections import Flavor, connection, connection_table
from .curvature import curvature, ricci_form, symmetrize
from .lemmas import FLAVORS, check_lemmas
from .scan import (
    MATCH,
    SCHEMA,
    ConfigError,
    load_grid,
    load_scan,
    run_scan,
    scan_document,
    summarize,
    to_csv,
    to_json,
)
from .theorems import Uncovered, theorem_predicate

EXIT_OK, EXIT_USAGE, EXIT_FINDINGS = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; 2 is reserved for scan findings here
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rat(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or p/q, got {text!r}")


def _flavor(text: str) -> Flavor:
    try:
        return Flavor.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


# -- helpers ------------------------------------------------------------------------

def _decimal(obj):
    """Mirror of ``obj`` with every rational string replaced by a float."""
    if isinstance(obj, str):
        try:
            return float(parse_rational(obj))
        except ValueError:
            return obj
    if isinstance(obj, list):
        return [_decimal(x) for x in obj]
    if isinstance(obj, dict):
        return {k: _decimal(v) for k, v in obj.items()}
    return obj


def _fmt_matrix(m) -> list:
    return [[format_rational(x) for x in row] for row in m]


def _algebra(args):
    if args.family == CUSTOM:
        if not args.constants:
            raise UsageError("--family Custom needs --constants FILE (JSON 3x3x3 array of p/q strings)")
        try:
            with open(args.constants, encoding="utf-8") as fh:
                raw = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read constants file: {exc}")
        if isinstance(raw, dict):
            raw = raw.get("constants")
        try:
            return custom_algebra(raw)
        except (ValueError, TypeError) as exc:
            raise UsageError(f"bad structure constants: {exc}")
    if args.constants:
        raise UsageError("--constants is only valid with --family Custom")
    values = {k: getattr(args, k) for k in PARAM_NAMES if getattr(args, k) is not None}
    if args.eta is not None:
        values["eta"] = args.eta
    try:
        return make_group(args.family, Params(**values))
    except (ValueError, JacobiFailure) as exc:
        raise UsageError(str(exc))


def _header(a, flavor: Flavor) -> dict:
    out = {
        "schema": SCHEMA,
        "family": a.family,
        "flavor": flavor.value,
        "structure_constants": [_fmt_matrix(a.constants[i]) for i in range(3)],
    }
    if a.family != CUSTOM:
        out["params"] = a.params.as_dict()
    if a.family == "G3":
        out["g3_convention"] = G3_CONVENTION_NOTE
    return out


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _text_matrix(title: str, m) -> list:
    lines = [title]
    width = max(len(x) for row in m for x in row)
    for row in m:
        lines.append("  [" + "  ".join(x.rjust(width) for x in row) + "]")
    return lines


# -- commands -----------------------------------------------------------------------

def cmd_derive(args: argparse.Namespace) -> int:
    a = _algebra(args)
    flavor = args.flavor
    c = connection(a, flavor)
    r = curvature(c, a)
    ric = ricci_form(r)
    doc = _header(a, flavor)
    doc["connection"] = connection_table(c)
    doc["curvature"] = [
        {"i": i + 1, "j": j + 1, "k": k + 1, "value": [format_rational(x) for x in r.r[i][j][k]]}
        for i in range(3) for j in range(i + 1, 3) for k in range(3)
    ]
    doc["ricci"] = _fmt_matrix(ric)
    doc["symmetric_ricci"] = _fmt_matrix(symmetrize(ric))
    if args.float:
        doc["decimal"] = {k: _decimal(doc[k]) for k in ("connection", "curvature", "ricci", "symmetric_ricci")}
    if args.format == "text":
        lines = [f"{a.family} {flavor.value}"]
        lines += [f"  nabla_e{row['i']} e{row['j']} = ({', '.join(row['value'])})" for row in doc["connection"]]
        lines += _text_matrix("Ric", doc["ricci"])
        lines += _text_matrix("symmetric Ric", doc["symmetric_ricci"])
        if args.float:
            lines += ["symmetric Ric (decimal)"] + [f"  {row}" for row in doc["decimal"]["symmetric_ricci"]]
        _emit("\n".join(lines) + "\n", args.output)
    elif args.format == "csv":
        rows = ["i,j,ricci,symmetric_ricci"]
        rows += [f"{i + 1},{j + 1},{doc['ricci'][i][j]},{doc['symmetric_ricci'][i][j]}"
                 for i in range(3) for j in range(3)]
        _emit("\n".join(rows) + "\n", args.output)
    else:
        _emit(to_json(doc), args.output)
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    a = _algebra(args)
    flavor = args.flavor
    if flavor is Flavor.LEVI_CIVITA:
        raise UsageError("solve works with --flavor canonical or kn")
    t, system, space = solve_point(a, flavor)
    doc = _header(a, flavor)
    doc.update(space.as_dict())
    doc["symmetric_ricci"] = _fmt_matrix(t)
    doc["system"] = _fmt_matrix(system.rows)
    if a.family != CUSTOM:
        try:
            case, predicted = theorem_predicate(a.family, flavor, a.params)
            doc["theorem"] = {"case_id": case.case_id, "predicted": predicted.as_dict(),
                              "verdict": "Match" if predicted == space else "Mismatch"}
        except Uncovered as exc:
            doc["theorem"] = {"case_id": exc.case_id or "uncovered", "predicted": None,
                              "verdict": "Uncovered", "reason": exc.reason}
    if args.float:
        doc["decimal"] = {"basis": _decimal(doc["basis"]), "system": _decimal(doc["system"])}
    if args.format == "text":
        lines = [f"{a.family} {flavor.value}: dimension {space.dimension}"]
        lines += [f"  ({', '.join(v)})" for v in doc["basis"]]
        if "theorem" in doc:
            lines.append(f"printed case {doc['theorem']['case_id']}: {doc['theorem']['verdict']}")
        _emit("\n".join(lines) + "\n", args.output)
    elif args.format == "csv":
        rows = ["vector,e1,e2,e3"] + [f"{n + 1},{','.join(v)}" for n, v in enumerate(doc["basis"])]
        _emit("\n".join(rows) + "\n", args.output)
    else:
        _emit(to_json(doc), args.output)
    return EXIT_OK


def cmd_check_lemmas(args: argparse.Namespace) -> int:
    families = [args.family] if args.family else list(FAMILIES)
    if args.family == CUSTOM:
        raise UsageError("check-lemmas covers the catalog families only")
    flavors = [args.flavor.value] if args.flavor else list(FLAVORS)
    if "levi-civita" in flavors:
        raise UsageError("printed tables exist for canonical and kn only")
    checks = check_lemmas(families, flavors, points=args.points, seed=args.seed)
    if args.format == "json":
        doc = {"schema": SCHEMA, "g3_convention": G3_CONVENTION_NOTE,
               "checks": [c.as_dict() for c in checks]}
        _emit(to_json(doc), args.output)
    elif args.format == "csv":
        rows = ["kind,family,flavor,points,comparisons,discrepancies,entries"]
        rows += [f"{c.kind},{c.family},{c.flavor},{c.points},{c.comparisons},"
                 f"{len(c.discrepancies)},{' '.join(c.entries())}" for c in checks]
        _emit("\n".join(rows) + "\n", args.output)
    else:
        lines = []
        for c in checks:
            status = "ok" if c.ok else f"{len(c.discrepancies)} discrepancies in {', '.join(c.entries())}"
            lines.append(f"{c.kind:5} {c.family} {c.flavor:9} {c.points} points: {status}")
        _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    config = None
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                config = json.load(fh)
        except OSError as exc:
            raise UsageError(f"cannot read config: {exc}")
        except json.JSONDecodeError as exc:
            raise UsageError(f"config is not valid JSON: {exc}")
    try:
        grid = load_grid(config)
    except ConfigError as exc:
        raise UsageError(f"bad scan config: {exc}")
    reports = run_scan(grid, jobs=args.jobs)
    if args.format == "csv":
        text = to_csv(reports)
    elif args.format == "text":
        text = _render_summary(summarize(reports), [r.as_dict() for r in reports])
    else:
        text = to_json(scan_document(grid, reports))
    _emit(text, args.output)
    summary = summarize(reports)
    if args.output:
        print(_render_summary(summary, []), end="", file=sys.stderr)
    return EXIT_OK if summary["counts"][MATCH] == summary["total"] else EXIT_FINDINGS


def _render_summary(summary: dict, reports: list) -> str:
    counts = summary["counts"]
    lines = [f"reports: {summary['total']}"]
    lines += [f"{k}: {v}" for k, v in counts.items()]
    for case_id, n in summary["non_match_by_case"].items():
        lines.append(f"  {case_id}: {n}")
    for r in reports:
        if r["verdict"] != MATCH:
            params = " ".join(f"{k}={v}" for k, v in r["params"].items())
            lines.append(f"{r['verdict']:9} {r['family']} {r['flavor']:9} {params}  [{r['case_id']}]")
    return "\n".join(lines) + "\n"


def cmd_report(args: argparse.Namespace) -> int:
    try:
        with open(args.input, encoding="utf-8") as fh:
            reports = load_scan(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read scan file: {exc}")
    except (ConfigError, ValueError, KeyError) as exc:
        raise UsageError(f"not a scan file: {exc}")
    summary = summarize(reports)
    if args.format == "json":
        _emit(to_json({"schema": SCHEMA, "summary": summary}), args.output)
    elif args.format == "csv":
        _emit(to_csv(reports), args.output)
    else:
        _emit(_render_summary(summary, reports), args.output)
    return EXIT_OK


# -- parser ---------------------------------------------------------------------------

def _point_flags(p: argparse.ArgumentParser, default_flavor: str | None = "canonical") -> None:
    p.add_argument("--family", required=True, choices=[*FAMILIES, CUSTOM])
    for name in PARAM_NAMES:
        p.add_argument(f"--{name}", type=_rat, default=None, metavar="P/Q")
    p.add_argument("--eta", type=int, choices=(1, -1), default=None, help="G4 sign, 1 or -1")
    p.add_argument("--constants", help="JSON file with c[i][j][k] for --family Custom")
    p.add_argument("--flavor", "--connection", dest="flavor", type=_flavor,
                   default=Flavor.parse(default_flavor),
                   help="levi-civita, canonical or kn (Kobayashi-Nomizu)")


def _output_flags(p: argparse.ArgumentParser, default: str = "json") -> None:
    p.add_argument("--format", choices=("json", "csv", "text"), default=default)
    p.add_argument("--output", "-o", help="write here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lrc", description="Left-invariant Ricci collineations of 3D Lorentzian Lie groups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("derive", help="connection, curvature and Ricci tables at one point")
    _point_flags(p)
    _output_flags(p)
    p.add_argument("--float", action="store_true", help="also print decimal approximations")
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("solve", help="collineation space at one point")
    _point_flags(p)
    _output_flags(p)
    p.add_argument("--float", action="store_true", help="also print decimal approximations")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check-lemmas", help="compare the engine with the printed tables")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--flavor", "--connection", dest="flavor", type=_flavor, default=None)
    p.add_argument("--points", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    _output_flags(p, default="text")
    p.set_defaults(func=cmd_check_lemmas)

    p = sub.add_parser("scan", help="sweep a grid and compare with the printed classification")
    p.add_argument("--config", help="JSON grid config; default grid when omitted")
    p.add_argument("--jobs", type=int, default=1)
    _output_flags(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("report", help="summarize a previous scan file")
    p.add_argument("input")
    _output_flags(p, default="text")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "points", 1) < 1 or getattr(args, "jobs", 1) < 1:
        parser.error("--points and --jobs must be positive")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"lrc {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"lrc {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
