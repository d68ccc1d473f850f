"""Command-line harness: eval, compare, zeros, table kappa, identities.

stdout carries data (one-line JSON or CSV), stderr carries diagnostics.
Exit codes: 0 success, 1 usage or unknown id, 2 region/domain, 3 convergence.
"""
from __future__ import annotations

import argparse
import math
import os
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Optional, Sequence

from . import critline, identities, intreps, serreps
from .core import (
    DEFAULT_OPTIONS,
    ConfigError,
    ConvergenceError,
    EvalOptions,
    EvalOutcome,
    UnknownIdError,
    ZetaRepsError,
    classify_region,
)
from .reference import PartialSumSpec, eta_reference, partial_sum, zeta_reference

EXIT_OK, EXIT_USAGE, EXIT_REGION, EXIT_CONVERGENCE = 0, 1, 2, 3

# expected kappa(0, k+1, .) values: (k, omega, value)
KAPPA_TABLE = (
    (0, 1.0, 0.156518),
    (0, math.pi, 1.076674),
    (1, 1.0, 0.927424e-2),
    (1, math.pi, 0.306837),
    (2, 1.0, 0.795491e-3),
    (2, math.pi, 0.134296),
)


# ---------------------------------------------------------------- formatting


def fmt_float(x: float) -> str:
    """17 significant digits, lowercase exponent; JSON null for non-finite."""
    x = float(x)
    if not math.isfinite(x):
        return "null"
    return format(x + 0.0, ".17g")


def to_json(obj: Any) -> str:
    """Single-line JSON with fixed float formatting."""
    import json

    if obj is None or isinstance(obj, bool):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, complex):
        return to_json([obj.real, obj.imag])
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ",".join(f"{json.dumps(str(k))}:{to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(to_json(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _csv_cell(x: Any) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return fmt_float(x) if math.isfinite(x) else ""
    return str(x)


def parse_complex(text: str) -> complex:
    """'re,im' or 're' into a complex number."""
    parts = [p.strip() for p in text.split(",")]
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise ConfigError(f"cannot parse {text!r} as re,im")


# ---------------------------------------------------------------- catalogs


def all_rep_ids() -> list[str]:
    return [r.id for r in intreps.catalog()] + [r.id for r in serreps.catalog_series()]


def resolve(rep_id: str):
    """(family, entry) for an id from either catalog."""
    try:
        return "integral", intreps.lookup(rep_id)
    except UnknownIdError:
        pass
    try:
        return "series", serreps.lookup(rep_id)
    except UnknownIdError:
        raise UnknownIdError(f"unknown representation id {rep_id!r}") from None


def evaluate_any(rep_id: str, s: complex, opts: EvalOptions = DEFAULT_OPTIONS, params: Optional[dict] = None) -> EvalOutcome:
    family, _ = resolve(rep_id)
    if family == "integral":
        return intreps.evaluate(rep_id, s, opts, params)
    return serreps.evaluate_series(rep_id, s, opts, params)


def in_region(rep_id: str, s: complex, params: Optional[dict] = None) -> bool:
    family, rep = resolve(rep_id)
    merged = {**rep.params, **(params or {})}
    region = rep.region_for(s, merged) if family == "integral" else rep.region
    return classify_region(s, region)


def is_formal(rep_id: str) -> bool:
    family, rep = resolve(rep_id)
    return family == "series" and rep.formal


def reference_value(rep_id: str, s: complex, value: complex, params: Optional[dict] = None) -> Optional[complex]:
    """Reference for what the entry computes, in the entry's own target.

    Returns ``None`` for targets with no standalone reference (zeta_minus,
    zeta_plus, kappa).
    """
    family, rep = resolve(rep_id)
    merged = {**rep.params, **(params or {})}
    target = rep.target
    try:
        if target == "zeta":
            return zeta_reference(s).value
        if target == "eta":
            return eta_reference(s).value
        if target == "zeta(s+1)":
            return zeta_reference(s + 1).value
        if target == "eta(s+1)":
            return eta_reference(s + 1).value
        if target.endswith("_rem"):
            n = int(merged["N"])
            shifted = s + 1 if target.startswith(("zeta(s+1)", "eta(s+1)")) else s
            alt = target.startswith("eta")
            full = (eta_reference if alt else zeta_reference)(shifted).value
            return full - partial_sum(shifted, PartialSumSpec(n, alt))
        if target == "zeta_head":
            return zeta_reference(s).value - (serreps.to_zeta("zeta_head", value, s) - value)
    except ZetaRepsError:
        return None
    return None


def deviation(rep_id: str, s: complex, value: complex, params: Optional[dict] = None) -> Optional[float]:
    ref = reference_value(rep_id, s, value, params)
    if ref is None:
        return None
    return abs(value - ref) / max(1.0, abs(ref))


@dataclass
class ComparisonRow:
    rep_id: str
    value: complex
    err_estimate: float
    in_region: bool
    digits_lost: float
    dev_from_reference: Optional[float]
    formal: bool = False
    error: Optional[str] = None
    exit_code: int = 0


@dataclass
class ComparisonReport:
    s: complex
    rows: list[ComparisonRow] = field(default_factory=list)
    max_pairwise_dev: float = 0.0

    @property
    def max_dev_ref(self) -> float:
        devs = [r.dev_from_reference for r in self.rows if r.dev_from_reference is not None and not r.formal]
        return max(devs) if devs else 0.0


def _row(args) -> ComparisonRow:
    rep_id, s, opts = args
    family, rep = resolve(rep_id)
    try:
        out = evaluate_any(rep_id, s, opts)
    except ZetaRepsError as exc:
        best = getattr(exc, "best", None)
        nan = complex(math.nan, math.nan)
        return ComparisonRow(
            rep_id, best.value if best else nan, best.err_estimate if best else math.nan,
            in_region(rep_id, s), 0.0, None, is_formal(rep_id), str(exc), exc.exit_code,
        )
    return ComparisonRow(
        rep_id, out.value, out.err_estimate, out.in_region, out.digits_lost,
        deviation(rep_id, s, out.value), out.formal or is_formal(rep_id),
    )


def _parallel_map(fn, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(jobs, len(items))) as pool:
        return list(pool.map(fn, items))


def compare(
    s: complex,
    reps: Optional[Sequence[str]] = None,
    opts: EvalOptions = DEFAULT_OPTIONS,
    force: bool = False,
    jobs: int = 1,
) -> ComparisonReport:
    """Evaluate several entries at one s; rows follow the order of ``reps``."""
    ids = list(all_rep_ids() if reps is None else reps)
    for rep_id in ids:
        resolve(rep_id)
    if force:
        opts = EvalOptions(opts.abs_tol, opts.rel_tol, opts.max_nodes, opts.max_terms, False, opts.extended_precision)
    else:
        ids = [i for i in ids if in_region(i, s)]
    rows = _parallel_map(_row, [(i, s, opts) for i in ids], jobs)
    by_target: dict[str, list[complex]] = {}
    for r in rows:
        if r.error is None and not r.formal:
            by_target.setdefault(resolve(r.rep_id)[1].target, []).append(r.value)
    worst = 0.0
    for values in by_target.values():
        for i, a in enumerate(values):
            for b in values[i + 1:]:
                worst = max(worst, abs(a - b))
    return ComparisonReport(s, rows, worst)


# ---------------------------------------------------------------- commands


def _opts(args, force: bool = False) -> EvalOptions:
    tol = getattr(args, "tol", None)
    base = DEFAULT_OPTIONS
    if tol is not None:
        if not tol > 0:
            raise ConfigError("--tol must be positive")
        base = EvalOptions(tol, tol, base.max_nodes, base.max_terms, base.enforce_region)
    if force:
        base = EvalOptions(base.abs_tol, base.rel_tol, base.max_nodes, base.max_terms, False)
    return base


def cmd_eval(args) -> int:
    s = parse_complex(args.s)
    params: dict[str, Any] = {}
    if args.omega is not None:
        params["omega"] = args.omega
    if args.c is not None:
        params["c"] = "s" if args.c.strip() == "s" else parse_complex(args.c)
        if isinstance(params["c"], complex) and params["c"].imag == 0:
            params["c"] = params["c"].real
    if args.n is not None:
        params["N"] = args.n
    opts = _opts(args, args.force)
    try:
        out = evaluate_any(args.rep, s, opts, params or None)
    except ConvergenceError as exc:
        print(f"convergence failure: {exc}", file=sys.stderr)
        if exc.best is not None:
            print(to_json(_eval_record(args.rep, s, exc.best)))
        return EXIT_CONVERGENCE
    print(to_json(_eval_record(args.rep, s, out)))
    return EXIT_OK


def _eval_record(rep_id: str, s: complex, out: EvalOutcome) -> dict:
    return {
        "rep": rep_id,
        "s": [s.real, s.imag],
        "value": [out.value.real, out.value.imag],
        "err": out.err_estimate,
        "nodes": out.nodes_used,
        "terms": out.terms_used,
        "in_region": out.in_region,
        "digits_lost": out.digits_lost,
    }


CSV_COLUMNS = ("rep_id", "value_re", "value_im", "err", "in_region", "digits_lost", "dev_ref")


def cmd_compare(args) -> int:
    s = parse_complex(args.s)
    reps = None if args.reps == "all" else [r.strip() for r in args.reps.split(",") if r.strip()]
    report = compare(s, reps, _opts(args), args.force, args.jobs)
    if args.json:
        print(to_json({
            "s": [s.real, s.imag],
            "max_pairwise_dev": report.max_pairwise_dev,
            "rows": [
                {
                    "rep_id": r.rep_id,
                    "value": [r.value.real, r.value.imag],
                    "err": r.err_estimate,
                    "in_region": r.in_region,
                    "digits_lost": r.digits_lost,
                    "dev_ref": r.dev_from_reference,
                    "formal": r.formal,
                    "error": r.error,
                }
                for r in report.rows
            ],
        }))
    else:
        print(",".join(CSV_COLUMNS))
        for r in report.rows:
            cells = (r.rep_id, r.value.real, r.value.imag, r.err_estimate, r.in_region, r.digits_lost, r.dev_from_reference)
            print(",".join(_csv_cell(c) for c in cells))
    code = EXIT_OK
    for r in report.rows:
        if r.error is not None:
            print(f"{r.rep_id}: {r.error}", file=sys.stderr)
            code = max(code, r.exit_code)
    return code


def cmd_zeros(args) -> int:
    opts = _opts(args)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        brackets = critline.scan_zeros(args.min, args.max, args.step, opts, jobs=args.jobs)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    print("kind,rho_lo,rho_hi")
    for b in brackets:
        print(f"{b.kind},{fmt_float(b.rho_lo)},{fmt_float(b.rho_hi)}")
    return EXIT_OK


def kappa_table_rows(n_terms: int = 1_000_000) -> list[dict]:
    rows = []
    for k, omega, expected in KAPPA_TABLE:
        closed = serreps.kappa(0, k + 1, omega)
        direct = serreps.kappa_direct(0, k + 1, omega, n_terms)
        rows.append({
            "k": k,
            "omega": omega,
            "expected": expected,
            "closed": closed,
            "direct": direct,
            "dev_closed": abs(closed - expected),
            "dev_direct": abs(direct - expected),
        })
    return rows


def cmd_table(args) -> int:
    if args.name != "kappa":
        raise ConfigError(f"unknown table {args.name!r}; available: kappa")
    rows = kappa_table_rows()
    if args.json:
        print(to_json(rows))
        return EXIT_OK
    cols = ("k", "omega", "expected", "closed", "direct", "dev_closed", "dev_direct")
    print(",".join(cols))
    for r in rows:
        print(",".join(_csv_cell(r[c]) for c in cols))
    return EXIT_OK


def cmd_identities(args) -> int:
    ids = None if not args.only else [i.strip() for i in args.only.split(",") if i.strip()]
    results = identities.run_identities(ids, jobs=args.jobs)
    print("id,residual,tol,pass")
    for r in results:
        print(f"{r.id},{fmt_float(r.residual)},{fmt_float(r.tol)},{'true' if r.passed else 'false'}")
        if r.note:
            print(f"{r.id}: {r.note}", file=sys.stderr)
    return EXIT_OK if all(r.passed for r in results) else EXIT_USAGE


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="zetareps",
        description="Evaluate and cross-check representations of the Riemann zeta function. "
        "Non-interactive: every command prints a report and exits.",
    )
    jobs_default = os.cpu_count() or 1
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate one representation")
    e.add_argument("--rep", required=True)
    e.add_argument("--s", required=True, help="re,im")
    e.add_argument("--tol", type=float)
    e.add_argument("--omega", type=float)
    e.add_argument("--c", help="re,im or the word s")
    e.add_argument("--n", type=int)
    e.add_argument("--force", action="store_true", help="evaluate outside the validity region")
    e.set_defaults(func=cmd_eval)

    c = sub.add_parser("compare", help="evaluate many representations at one s")
    c.add_argument("--s", required=True)
    c.add_argument("--reps", default="all")
    fmt = c.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true", default=True)
    fmt.add_argument("--json", action="store_true")
    c.add_argument("--tol", type=float)
    c.add_argument("--force", action="store_true")
    c.add_argument("--jobs", type=int, default=jobs_default)
    c.set_defaults(func=cmd_compare)

    z = sub.add_parser("zeros", help="bracket zeros on the critical line")
    z.add_argument("--min", type=float, required=True)
    z.add_argument("--max", type=float, required=True)
    z.add_argument("--step", type=float, default=0.05)
    z.add_argument("--jobs", type=int, default=1)
    z.set_defaults(func=cmd_zeros)

    t = sub.add_parser("table", help="tabulate reference values against computed ones")
    t.add_argument("name", choices=["kappa"])
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=cmd_table)

    i = sub.add_parser("identities", help="run the identity checks")
    i.add_argument("--only", help="comma-separated ids")
    i.add_argument("--jobs", type=int, default=1)
    i.set_defaults(func=cmd_identities)
    return p


def _join_negative_values(argv: list[str]) -> list[str]:
    # '--s -2,0' would otherwise be read as an unknown option
    out: list[str] = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a in ("--s", "--c", "--min", "--max") and i + 1 < len(argv) and argv[i + 1].startswith("-") and len(argv[i + 1]) > 1 and (argv[i + 1][1].isdigit() or argv[i + 1][1] == "."):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = _join_negative_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UnknownIdError as exc:
        print(f"error: {exc}", file=sys.stderr)
        pool = identities.IDENTITY_IDS if args.command == "identities" else all_rep_ids()
        print("known ids: " + ",".join(pool), file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"convergence failure: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except ZetaRepsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
