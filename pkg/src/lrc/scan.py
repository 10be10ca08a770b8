"""Parameter sweeps that compare printed classification cases with computed spaces."""
from __future__ import annotations

import csv
import io
import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from types import SimpleNamespace

from .algebra import (
    FAMILIES,
    G3_CONVENTION_NOTE,
    PARAM_NAMES,
    ConstraintViolation,
    Params,
    check_constraints,
    format_rational,
    make_group,
    parse_rational,
)
from .collineation import SolutionSpace, rref, solve_point
from .connections import Flavor
from .theorems import (
    Uncovered,
    det2,
    g2_canonical_abcd,
    g4_canonical_abcd,
    matching_cases,
    theorem_predicate,
)

SCHEMA = "lrc/1"
MATCH, MISMATCH, UNCOVERED = "Match", "Mismatch", "Uncovered"
VERDICTS = (MATCH, MISMATCH, UNCOVERED)

DEFAULT_VALUES = ("-2", "-1", "-1/2", "0", "1/2", "1", "2")
DEFAULT_CONFIG = {
    "families": list(FAMILIES),
    "flavors": ["canonical", "kn"],
    "values": list(DEFAULT_VALUES),
    "eta": [-1, 1],
    "boundaries": True,
}

CSV_FIELDS = ("family", "flavor", *PARAM_NAMES, "eta", "case_id",
              "predicted_dim", "computed_dim", "verdict")


class ConfigError(ValueError):
    pass


class NotAMismatch(ValueError):
    pass


# -- grid construction --------------------------------------------------------------

@dataclass(frozen=True)
class Grid:
    families: tuple
    flavors: tuple
    values: tuple
    eta: tuple
    boundaries: bool
    overrides: dict = field(default_factory=dict)  # family -> {param: values}
    points: tuple = ()  # extra (family, Params)

    def values_for(self, family: str, name: str) -> tuple:
        return self.overrides.get(family, {}).get(name, self.values)

    def as_dict(self) -> dict:
        return {
            "families": list(self.families),
            "flavors": list(self.flavors),
            "values": [format_rational(v) for v in self.values],
            "eta": list(self.eta),
            "boundaries": self.boundaries,
            "parameters": {f: {k: [format_rational(x) for x in v] for k, v in sorted(d.items())}
                           for f, d in sorted(self.overrides.items())},
            "points": [{"family": f, **p.as_dict()} for f, p in self.points],
        }


def _rationals(raw, where: str) -> tuple:
    if not isinstance(raw, list) or not raw:
        raise ConfigError(f"{where} must be a non-empty list of \"p/q\" strings")
    try:
        return tuple(sorted({parse_rational(x) for x in raw}))
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"{where}: {exc}") from exc


def load_grid(config: dict | None = None) -> Grid:
    cfg = dict(DEFAULT_CONFIG)
    if config is not None:
        if not isinstance(config, dict):
            raise ConfigError("scan config must be a JSON object")
        unknown = set(config) - {"families", "flavors", "values", "eta", "boundaries", "parameters", "points"}
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        cfg.update(config)
    families = cfg["families"]
    if not isinstance(families, list) or not families or any(f not in FAMILIES for f in families):
        raise ConfigError(f"families must be a non-empty list drawn from {list(FAMILIES)}")
    try:
        flavors = tuple(Flavor.parse(f).value for f in cfg["flavors"])
    except (ValueError, TypeError) as exc:
        raise ConfigError(f"flavors: {exc}") from exc
    if not flavors or "levi-civita" in flavors:
        raise ConfigError("flavors must be a non-empty list of canonical/kn")
    eta = cfg["eta"]
    if not isinstance(eta, list) or not eta or any(e not in (1, -1) for e in eta):
        raise ConfigError("eta must be a non-empty list drawn from [-1, 1]")
    if not isinstance(cfg["boundaries"], bool):
        raise ConfigError("boundaries must be true or false")
    overrides = {}
    params = cfg.get("parameters", {})
    if not isinstance(params, dict):
        raise ConfigError("parameters must map family -> {parameter: values}")
    for fam, d in params.items():
        if fam not in FAMILIES or not isinstance(d, dict) or set(d) - set(PARAM_NAMES):
            raise ConfigError(f"parameters.{fam} must map alpha..delta to value lists")
        overrides[fam] = {k: _rationals(v, f"parameters.{fam}.{k}") for k, v in d.items()}
    points = []
    for i, entry in enumerate(cfg.get("points", [])):
        if not isinstance(entry, dict) or entry.get("family") not in FAMILIES:
            raise ConfigError(f"points[{i}] needs a valid family")
        try:
            p = Params.from_mapping(entry)
            check_constraints(entry["family"], p)
        except (ValueError, TypeError) as exc:
            raise ConfigError(f"points[{i}]: {exc}") from exc
        points.append((entry["family"], p))
    return Grid(tuple(families), tuple(sorted(set(flavors), key=flavors.index)),
                _rationals(cfg["values"], "values"), tuple(sorted(set(eta))),
                cfg["boundaries"], overrides, tuple(points))


def _rational_roots(fn, fixed: dict, var: str) -> list:
    """Rational roots in ``var`` of a polynomial given as a function of parameters."""
    import sympy

    x = sympy.Symbol(var)
    ns = SimpleNamespace(**{k: sympy.Rational(str(v)) if isinstance(v, Fraction) else v
                            for k, v in fixed.items()})
    setattr(ns, var, x)
    expr = sympy.expand(fn(ns))
    if expr == 0:
        return []
    return sorted(Fraction(str(r)) for r in sympy.Poly(expr, x).ground_roots())


def _g2_det(ns):
    return det2(g2_canonical_abcd(ns))


def _g4_det(ns):
    return det2(g4_canonical_abcd(ns, ns.eta))


def _family_points(family: str, grid: Grid):
    V = lambda name: grid.values_for(family, name)  # noqa: E731
    nz = lambda name: tuple(v for v in V(name) if v != 0)  # noqa: E731
    if family == "G1":
        for a, b in itertools.product(V("alpha"), V("beta")):
            yield Params(a, b)
    elif family in ("G2", "G3"):
        for a, b, c in itertools.product(V("alpha"), V("beta"), V("gamma")):
            yield Params(a, b, c)
    elif family == "G4":
        for a, b, e in itertools.product(V("alpha"), V("beta"), grid.eta):
            yield Params(a, b, eta=e)
    elif family in ("G5", "G6"):
        # alpha*gamma ± beta*delta = 0 solved for delta when beta≠0
        sign = -1 if family == "G5" else 1
        for a, b, c in itertools.product(V("alpha"), V("beta"), V("gamma")):
            if b != 0:
                yield Params(a, b, c, sign * a * c / b)
            elif a * c == 0:
                for d in V("delta"):
                    yield Params(a, b, c, d)
    elif family == "G7":
        for b, c, d in itertools.product(V("beta"), V("gamma"), V("delta")):
            yield Params(0, b, c, d)
        for a, b, d in itertools.product(nz("alpha"), V("beta"), V("delta")):
            yield Params(a, b, 0, d)
    if not grid.boundaries:
        return
    # boundary manifolds of the printed case predicates
    if family == "G2":
        for b, c in itertools.product(nz("beta"), nz("gamma")):
            yield Params(4 * b, b, c)
            for a in _rational_roots(_g2_det, {"beta": b, "gamma": c}, "alpha"):
                yield Params(a, b, c)
    elif family == "G3":
        for a, b in itertools.product(V("alpha"), V("beta")):
            yield Params(a, b, a + b)
            yield Params(a, a, b)
        for b in V("beta"):
            yield Params(0, b, b)
    elif family == "G4":
        special = [(0, 1, 1), (2, 2, 1), (2, 1, 1), (0, -1, -1), (-2, -2, -1), (-2, -1, -1)]
        for a in (0, 2, -2, Fraction(1, 4), Fraction(-1, 4)):
            special += [(a, 0, 1), (a, 0, -1)]
        for e in grid.eta:
            special.append((e, 0, e))  # alpha*eta = 1
        for a, b, e in special:
            if e in grid.eta:
                yield Params(a, b, eta=e)
        for b, e in itertools.product(V("beta"), grid.eta):
            yield Params(2 * b - 2 * e, b, eta=e)
            yield Params(2 + 2 * b, b, eta=e)
            yield Params(2 - 2 * b, b, eta=e)
            yield Params(4 * b, b, eta=e)
            if b != 0:
                for a in _rational_roots(_g4_det, {"beta": b, "eta": e}, "alpha"):
                    yield Params(a, b, eta=e)
    elif family == "G6":
        for a, c in itertools.product(V("alpha"), V("gamma")):
            yield Params(a, a, c, c)
            yield Params(a, -a, c, -c)


def grid_points(grid: Grid) -> list:
    """Sorted, de-duplicated, constraint-satisfying ``(family, Params)`` pairs."""
    seen = set()
    out = []
    candidates = [(f, p) for f in grid.families for p in _family_points(f, grid)]
    candidates += [(f, p) for f, p in grid.points if f in grid.families]
    for family, p in candidates:
        if family != "G4" and p.eta is not None:
            p = Params(p.alpha, p.beta, p.gamma, p.delta)
        try:
            check_constraints(family, p)
        except ConstraintViolation:
            continue
        key = (family, p.key())
        if key not in seen:
            seen.add(key)
            out.append((family, p))
    out.sort(key=lambda fp: (FAMILIES.index(fp[0]), fp[1].key()))
    return out


# -- reports ------------------------------------------------------------------------

@dataclass(frozen=True)
class CaseReport:
    family: str
    flavor: str
    params: Params
    case_id: str
    case_text: str
    predicted: SolutionSpace | None
    computed: SolutionSpace
    verdict: str
    overlapping: tuple = ()
    reason: str = ""
    system: tuple = ()
    constants: tuple = ()

    @property
    def certificate(self) -> dict | None:
        return None if self.verdict == MATCH else certify_mismatch(self)

    def as_dict(self) -> dict:
        out = {
            "family": self.family,
            "flavor": self.flavor,
            "params": self.params.as_dict(),
            "case_id": self.case_id,
            "predicted": None if self.predicted is None else self.predicted.as_dict(),
            "computed": self.computed.as_dict(),
            "verdict": self.verdict,
        }
        if self.overlapping:
            out["overlapping_cases"] = list(self.overlapping)
        if self.verdict != MATCH:
            out["certificate"] = self.certificate
        return out

    def csv_row(self) -> dict:
        row = {"family": self.family, "flavor": self.flavor}
        row.update({k: format_rational(getattr(self.params, k)) for k in PARAM_NAMES})
        row["eta"] = "" if self.params.eta is None else str(self.params.eta)
        row["case_id"] = self.case_id
        row["predicted_dim"] = "" if self.predicted is None else str(self.predicted.dimension)
        row["computed_dim"] = str(self.computed.dimension)
        row["verdict"] = self.verdict
        return row


def certify_mismatch(report: CaseReport) -> dict:
    """Everything needed to re-check a non-Match verdict by hand."""
    if report.verdict == MATCH:
        raise NotAMismatch(f"{report.case_id} at {report.params.as_dict()} is a Match")
    reduced, pivots = rref(report.system)
    return {
        "case_id": report.case_id,
        "case_text": report.case_text,
        "reason": report.reason,
        "structure_constants": [[[format_rational(x) for x in v] for v in row] for row in report.constants],
        "system_rows": ["(1,1)", "(1,2)", "(1,3)", "(2,2)", "(2,3)", "(3,3)"],
        "system": [[format_rational(x) for x in r] for r in report.system],
        "rref": [[format_rational(x) for x in r] for r in reduced],
        "pivots": [c + 1 for c in pivots],
        "predicted_span": None if report.predicted is None else report.predicted.as_dict(),
        "computed_span": report.computed.as_dict(),
    }


def evaluate_point(family: str, flavor: str, p: Params) -> CaseReport:
    a = make_group(family, p)
    _, system, computed = solve_point(a, flavor)
    overlapping = tuple(c.case_id for c in matching_cases(family, flavor, a.params))
    common = dict(family=family, flavor=flavor, params=a.params, computed=computed,
                  overlapping=overlapping if len(overlapping) > 1 else (),
                  system=system.rows, constants=a.constants)
    try:
        case, predicted = theorem_predicate(family, flavor, a.params)
    except Uncovered as exc:
        return CaseReport(case_id=exc.case_id or "uncovered", case_text="", predicted=None,
                          verdict=UNCOVERED, reason=exc.reason, **common)
    verdict = MATCH if predicted == computed else MISMATCH
    return CaseReport(case_id=case.case_id, case_text=case.text, predicted=predicted,
                      verdict=verdict, **common)


def _evaluate_chunk(tasks):
    return [evaluate_point(*t) for t in tasks]


def run_scan(grid: Grid, jobs: int = 1) -> list:
    tasks = [(f, fl, p) for f, p in grid_points(grid) for fl in grid.flavors]
    tasks.sort(key=lambda t: (FAMILIES.index(t[0]), t[1], t[2].key()))
    if jobs <= 1 or len(tasks) < 2:
        return [evaluate_point(*t) for t in tasks]
    size = max(1, len(tasks) // (jobs * 4))
    chunks = [tasks[i:i + size] for i in range(0, len(tasks), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves submission order, so the result is independent of completion order
        return [r for chunk in pool.map(_evaluate_chunk, chunks) for r in chunk]


def summarize(reports) -> dict:
    counts = {v: 0 for v in VERDICTS}
    by_case: dict = {}
    for r in reports:
        counts[r["verdict"] if isinstance(r, dict) else r.verdict] += 1
        if (r["verdict"] if isinstance(r, dict) else r.verdict) != MATCH:
            cid = r["case_id"] if isinstance(r, dict) else r.case_id
            by_case[cid] = by_case.get(cid, 0) + 1
    total = sum(counts.values())
    return {
        "total": total,
        "counts": counts,
        "match_rate": format_rational(Fraction(counts[MATCH], total)) if total else "0",
        "non_match_by_case": dict(sorted(by_case.items())),
    }


def scan_document(grid: Grid, reports: list) -> dict:
    return {
        "schema": SCHEMA,
        "metadata": {"g3_convention": G3_CONVENTION_NOTE, "grid": grid.as_dict()},
        "summary": summarize(reports),
        "reports": [r.as_dict() for r in reports],
    }


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=1, sort_keys=True, ensure_ascii=False) + "\n"


def to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r.csv_row() if isinstance(r, CaseReport) else _csv_from_dict(r))
    return buf.getvalue()


def _csv_from_dict(r: dict) -> dict:
    row = {"family": r["family"], "flavor": r["flavor"]}
    row.update({k: r["params"][k] for k in PARAM_NAMES})
    row["eta"] = "" if r["params"].get("eta") is None else str(r["params"]["eta"])
    row["case_id"] = r["case_id"]
    row["predicted_dim"] = "" if r["predicted"] is None else str(r["predicted"]["dimension"])
    row["computed_dim"] = str(r["computed"]["dimension"])
    row["verdict"] = r["verdict"]
    return row


def load_scan(text: str) -> list:
    """Read a JSON or CSV scan file back into report dicts (CSV rows keep only the CSV columns)."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        doc = json.loads(text)
        if doc.get("schema") != SCHEMA:
            raise ConfigError(f"unsupported scan schema {doc.get('schema')!r}")
        return doc["reports"]
    rows = list(csv.DictReader(io.StringIO(text)))
    if rows and set(CSV_FIELDS) - set(rows[0]):
        raise ConfigError("CSV scan file is missing required columns")
    return [
        {"family": r["family"], "flavor": r["flavor"],
         "params": {**{k: r[k] for k in PARAM_NAMES}, **({"eta": int(r["eta"])} if r["eta"] else {})},
         "case_id": r["case_id"],
         "predicted": None if r["predicted_dim"] == "" else {"dimension": int(r["predicted_dim"])},
         "computed": {"dimension": int(r["computed_dim"])},
         "verdict": r["verdict"]}
        for r in rows
    ]
