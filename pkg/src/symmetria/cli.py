"""Command-line entry point: ``symmetria <command> [flags]``.

Exit codes: 0 ok, 1 verification mismatch, 2 usage error, 3 resource cap.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import verify as V
from .catalog import GF_NAMES, gf_catalog
from .distributions import (
    PAIRS, LimitLaw, UnsupportedPairError, default_law, exact_distribution, histograms_to_csv,
    limit_law_distance, moments,
)
from .paths import EnumerationLimitError
from .reference_tables import TABLES
from .series import SeriesError

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

# built-in values for options a config file may also set
DEFAULTS = {
    "json": False,
    "order": None,
    "max_n": None,
    "n_max": 6,
    "cap": 10**6,
    "time_budget": 600.0,
    "method": None,
    "law": None,
    "csv": None,
    "pretty": False,
    "a": 0,
    "b": 0,
}

VERIFY_SUITES = ("bijections", "feq", "series_identities", "moments", "limits", "oeis", "tables")


class UsageError(Exception):
    pass


class CapError(Exception):
    pass


def _frac(q: Fraction) -> str:
    return str(q)


def _emit(args, payload, human: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(human)


# -- table -------------------------------------------------------------------


def cmd_table(args) -> int:
    if args.name not in TABLES:
        raise UsageError(f"unknown table {args.name!r}; choose from {', '.join(TABLES)}")
    rows, first_k, (cls, stat) = TABLES[args.name]
    n_lo = min(rows)
    if args.n_max < n_lo:
        raise UsageError(f"--n-max must be >= {n_lo}")
    size = exact_distribution(cls, stat, args.n_max).total
    if size > args.cap:
        raise CapError(f"{cls} at n={args.n_max} has {size} objects, above --cap {args.cap}")
    data = V.table_rows(args.name, args.n_max)
    mismatched = []
    lines = [f"{args.name}: counts by {stat}, k = {first_k}, {first_k + 1}, ..."]
    out_rows = []
    for n, r in data.items():
        width = max([*r["series"], *r["enumeration"], first_k]) + 1 - first_k
        row = [r["series"].get(first_k + i, 0) for i in range(width)]
        agree = r["series"] == r["enumeration"]
        published = r["published"]
        if published is not None:
            agree = agree and published == r["series"]
        if not agree:
            mismatched.append(n)
        tag = "published" if published is not None else "extended"
        lines.append(f"n={n:<3} {' '.join(map(str, row)):<48} "
                     f"{'ok' if agree else 'MISMATCH'} ({tag})")
        out_rows.append({"n": n, "row": row, "series": _keys(r["series"]),
                         "enumeration": _keys(r["enumeration"]),
                         "published": None if published is None else _keys(published),
                         "status": "ok" if agree else "mismatch"})
    payload = {"table": args.name, "first_k": first_k, "rows": out_rows,
               "mismatched_rows": mismatched}
    _emit(args, payload, "\n".join(lines))
    return EXIT_MISMATCH if mismatched else EXIT_OK


def _keys(d: dict) -> dict:
    return {str(k): v for k, v in sorted(d.items())}


# -- series ------------------------------------------------------------------


def cmd_series(args) -> int:
    if args.name not in GF_NAMES:
        raise UsageError(f"unknown generating function {args.name!r}; "
                         f"choose from {', '.join(GF_NAMES)}")
    order = 8 if args.order is None else args.order
    if order < 0:
        raise UsageError("--order must be >= 0")
    params = {}
    if args.name == "B_AB":
        params = {"a": args.a, "b": args.b}
    elif args.name == "B_UVZ":
        params = {"cap": args.cap if args.cap != DEFAULTS["cap"] else None}
    s = gf_catalog(args.name, order, method=args.method or "structural", **params)
    if args.json and not args.pretty:
        print(s.to_json())
    elif args.json:
        print(json.dumps({"name": args.name, "order": order, "pretty": s.pretty()}))
    else:
        print(s.pretty())
    return EXIT_OK


# -- verify ------------------------------------------------------------------


def _suite_runner(name: str, args):
    order, max_n = args.order, args.max_n
    if name == "bijections":
        n = 7 if max_n is None else max_n
        return lambda: V.suite_bijections(n, n + 3)
    if name == "feq":
        return lambda: V.suite_feq(12 if order is None else order)
    if name == "series_identities":
        return lambda: V.suite_series_identities(14 if order is None else order)
    if name == "moments":
        return lambda: V.suite_moments(12 if max_n is None else max_n)
    if name == "limits":
        return V.suite_limits
    if name == "oeis":
        return V.suite_oeis
    if name == "tables":
        return V.suite_tables
    raise UsageError(f"unknown suite {name!r}")


def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in VERIFY_SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(VERIFY_SUITES)}")
    names = sorted(VERIFY_SUITES) if args.suite == "all" else [args.suite]
    start = time.monotonic()
    checks, skipped, timings = [], [], {}
    for name in names:
        if time.monotonic() - start > args.time_budget:
            skipped.append(name)
            continue
        t0 = time.monotonic()
        for r in _suite_runner(name, args)():
            checks.append({**r, "suite": name})
        timings[name] = round(time.monotonic() - t0, 3)
    checks.sort(key=lambda r: (r["name"], r["suite"]))
    counts = V.tally(checks)
    payload = {"suite": args.suite, "checks": checks, "ok": counts.get("ok", 0),
               "mismatch": sum(v for k, v in counts.items() if k != "ok"),
               "skipped_suites": skipped, "seconds": timings}
    lines = [f"{r['status']:<9} {r['name']}" for r in checks]
    lines.append(f"{payload['ok']} ok, {payload['mismatch']} mismatch"
                 + (f", skipped over time budget: {', '.join(skipped)}" if skipped else ""))
    _emit(args, _jsonable(payload), "\n".join(lines))
    if payload["mismatch"]:
        return EXIT_MISMATCH
    return EXIT_CAP if skipped else EXIT_OK


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    return obj


# -- distribution --------------------------------------------------------------


def cmd_distribution(args) -> int:
    if args.n < 0:
        raise UsageError("N must be >= 0")
    method = args.method or "series"
    h = exact_distribution(args.cls, args.stat, args.n, method=method)
    payload = {"class": args.cls, "statistic": args.stat, "n": args.n, "total": h.total,
               "counts": _keys(h.counts), "row": h.row()}
    lines = [f"{args.cls} {args.stat} n={args.n}: {','.join(map(str, h.row()))} (total {h.total})"]
    if h.total:
        mean, var = moments(h)
        payload.update(mean=_frac(mean), variance=_frac(var))
        lines.append(f"mean {mean} ({float(mean):.6g}), variance {var} ({float(var):.6g})")
    if args.law is not None:
        law = default_law(args.cls, args.stat) if args.law == "default" else LimitLaw.parse(args.law)
        kd, le = limit_law_distance(args.cls, args.stat, args.n, law, h)
        payload["law"] = {"kind": law.kind, "sigma": law.sigma, "kolmogorov": kd,
                          "local_law_max_err": le}
        lines.append(f"{law.kind}({law.sigma:.6g}): Kolmogorov distance {kd:.6g}, "
                     f"max local-law error {le:.6g}")
    if args.csv:
        Path(args.csv).write_text(histograms_to_csv([h]))
        payload["csv"] = args.csv
        lines.append(f"wrote {args.csv}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


# -- argument handling -------------------------------------------------------------


def _common(p: argparse.ArgumentParser) -> None:
    # SUPPRESS so a flag given before the command is not reset by the subparser
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                   help="emit JSON on stdout")
    p.add_argument("--config", default=argparse.SUPPRESS,
                   help="JSON file of option values; explicit flags win")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="symmetria", allow_abbrev=False,
                                 description="Symmetry statistics on lattice paths: tables, "
                                             "series, verification suites and distributions.")
    _common(ap)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", allow_abbrev=False, help="reproduce a published count table")
    _common(p)
    p.add_argument("name", help=", ".join(TABLES))
    p.add_argument("--n-max", type=int, default=argparse.SUPPRESS)
    p.add_argument("--cap", type=int, default=argparse.SUPPRESS,
                   help="largest object count to enumerate (default 10^6)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("series", allow_abbrev=False, help="expand a catalogued generating function")
    _common(p)
    p.add_argument("name", help=", ".join(GF_NAMES))
    p.add_argument("--order", type=int, default=argparse.SUPPRESS)
    p.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS)
    p.add_argument("--method", choices=("structural", "closed"), default=argparse.SUPPRESS)
    p.add_argument("--a", type=int, default=argparse.SUPPRESS, help="start height for B_AB")
    p.add_argument("--b", type=int, default=argparse.SUPPRESS, help="end height for B_AB")
    p.add_argument("--cap", type=int, default=argparse.SUPPRESS,
                   help="auxiliary exponent cap for B_UVZ")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", allow_abbrev=False, help="run a verification suite")
    _common(p)
    p.add_argument("suite", help="all, " + ", ".join(VERIFY_SUITES))
    p.add_argument("--order", type=int, default=argparse.SUPPRESS)
    p.add_argument("--max-n", type=int, default=argparse.SUPPRESS)
    p.add_argument("--time-budget", type=float, default=argparse.SUPPRESS,
                   help="seconds; suites not started within it are skipped (exit 3)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("distribution", allow_abbrev=False,
                       help="exact distribution of a statistic, optionally against a limit law")
    _common(p)
    p.add_argument("cls", metavar="CLASS",
                   help=", ".join(sorted({c for c, _ in PAIRS})))
    p.add_argument("stat", metavar="STAT")
    p.add_argument("n", metavar="N", type=int)
    p.add_argument("--law", default=argparse.SUPPRESS,
                   help='"rayleigh:SIGMA", "half_normal:SIGMA" or "default"')
    p.add_argument("--csv", default=argparse.SUPPRESS, help="write n,k,count,total rows here")
    p.add_argument("--method", choices=("series", "oracle"), default=argparse.SUPPRESS)
    p.set_defaults(func=cmd_distribution)
    return ap


def _load_config(path: str | None, command: str) -> dict:
    if not path:
        return {}
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError("config must be a JSON object")
    # top-level keys apply to every command; a nested object keyed by the
    # command name overrides them
    merged = {k.replace("-", "_"): v for k, v in data.items() if not isinstance(v, dict)}
    section = data.get(command, {})
    if isinstance(section, dict):
        merged.update({k.replace("-", "_"): v for k, v in section.items()})
    unknown = set(merged) - set(DEFAULTS)
    if unknown:
        raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return merged


def resolve(args: argparse.Namespace) -> argparse.Namespace:
    """Fill options absent from the command line: config file first, then defaults."""
    config = _load_config(getattr(args, "config", None), args.command)
    for key, value in DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, config.get(key, value))
    return args


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        resolve(args)
        return args.func(args)
    except (UsageError, UnsupportedPairError, SeriesError, ValueError) as exc:
        print(f"symmetria: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapError, EnumerationLimitError) as exc:
        print(f"symmetria: resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
