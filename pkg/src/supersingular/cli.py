"""Command-line front end: hpoly, keylemma, tower and sweep.

Polynomials are given as ascending comma lists of base-field codes
("1,0,1" is 1 + T^2) or as "auto:d" for the smallest monic irreducible of
degree d with nonzero constant term.  Every flag can also be set through an
environment variable SUPERSINGULAR_<FLAG> (e.g. SUPERSINGULAR_SCAN_CAP).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .errors import SupersingularError
from .field import auto_ideal, build_tower
from .field.upoly import DEFAULT_SCAN_CAP
from .partitions import enumerate_P, keylemma_check
from .ssformula import HPOLY_CHECKS, H_lambda, hpoly_report
from .towercert import ratio_table_csv, ratio_table, tower_report

SCHEMA_VERSION = 1
ENV_PREFIX = "SUPERSINGULAR_"
KEYLEMMA_DMAX = 8
NMAX_LIMIT = 64
SWEEP_CHECKS = ("hpoly", "tower")


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def resolve_ideal(q: int, p_text: str | None, d: int | None) -> list[int]:
    """The coefficient list of p(T) from --p or --d."""
    if p_text is None:
        if d is None:
            raise argparse.ArgumentTypeError("give --p or --d")
        return list(auto_ideal(q, d))
    if p_text.startswith("auto:"):
        return list(auto_ideal(q, int(p_text[5:])))
    return parse_int_list(p_text)


def _env_default(name: str, default):
    return os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"), default)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="supersingular", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, with_ideal=True):
        if with_ideal:
            sp.add_argument("--q", type=int, default=_env_default("q", None))
            sp.add_argument("--p", default=_env_default("p", None),
                            help='ascending coefficients, e.g. "1,0,1" for 1+T^2, or "auto:d"')
            sp.add_argument("--d", type=int, default=_env_default("d", None),
                            help="pick p(T) automatically with this degree")
        sp.add_argument("--format", choices=("json", "csv"), default=_env_default("format", "json"))
        sp.add_argument("--out", default=_env_default("out", None), help="write here instead of stdout")
        sp.add_argument("--scan-cap", type=int, default=int(_env_default("scan_cap", DEFAULT_SCAN_CAP)))
        sp.add_argument("--timing", action="store_true",
                        default=bool(_env_default("timing", "")),
                        help="include wall-clock seconds (output is then not reproducible)")

    hp = sub.add_parser("hpoly", help="supersingular polynomial and its properties")
    common(hp)
    hp.add_argument("--checks", default=_env_default("checks", ",".join(HPOLY_CHECKS)),
                    help="comma list from " + ",".join(HPOLY_CHECKS))

    kl = sub.add_parser("keylemma", help="symbolic check of the symmetric-function identity")
    common(kl, with_ideal=False)
    kl.add_argument("--dmax", type=int, default=int(_env_default("dmax", 6)))

    tw = sub.add_parser("tower", help="Omega, splitting, ratio table, covering checks")
    common(tw)
    tw.add_argument("--nmax", type=int, default=int(_env_default("nmax", 12)))

    sw = sub.add_parser("sweep", help="run hpoly and tower over a grid of (q, d)")
    common(sw, with_ideal=False)
    sw.add_argument("--q", type=parse_int_list, default=_env_default("q", "2,3"))
    sw.add_argument("--d", type=parse_int_list, default=_env_default("d", "1,2"))
    sw.add_argument("--nmax", type=int, default=int(_env_default("nmax", 12)))
    sw.add_argument("--checks", default=_env_default("checks", ",".join(SWEEP_CHECKS)))
    sw.add_argument("--jobs", type=int, default=int(_env_default("jobs", 1)))
    return ap


# commands ---------------------------------------------------------------------

def _tower(args):
    if args.q is None:
        raise argparse.ArgumentTypeError("--q is required")
    q = int(args.q)
    d = None if args.d is None else int(args.d)
    return build_tower(q, resolve_ideal(q, args.p, d), table_cap=max(args.scan_cap, 1 << 21))


def _checks(text, allowed):
    groups = [c for c in str(text).split(",") if c]
    bad = [c for c in groups if c not in allowed]
    if bad:
        raise argparse.ArgumentTypeError(f"unknown checks {bad}; choose from {list(allowed)}")
    return groups


def cmd_hpoly(args) -> dict:
    tower = _tower(args)
    rep = hpoly_report(tower, args.scan_cap, _checks(args.checks, HPOLY_CHECKS))
    return {"config": {**tower.describe(), "checks": _checks(args.checks, HPOLY_CHECKS)},
            "report": rep, "ok": rep["ok"]}


def cmd_keylemma(args) -> dict:
    if not 0 <= args.dmax <= KEYLEMMA_DMAX:
        raise argparse.ArgumentTypeError(f"--dmax must be in [0, {KEYLEMMA_DMAX}]")
    rows = []
    for d in range(1, args.dmax + 1):
        pairs = enumerate_P(d)
        failed = [p.to_json() for p in pairs if not keylemma_check(d, p)]
        rows.append({"d": d, "pairs": len(pairs), "failed": failed, "ok": not failed})
    return {"config": {"dmax": args.dmax}, "report": {"levels": rows,
            "total_pairs": sum(r["pairs"] for r in rows)}, "ok": all(r["ok"] for r in rows)}


def cmd_tower(args) -> dict:
    if not 1 <= args.nmax <= NMAX_LIMIT:
        raise argparse.ArgumentTypeError(f"--nmax must be in [1, {NMAX_LIMIT}]")
    tower = _tower(args)
    rep = tower_report(tower, H_lambda(tower), args.nmax, args.scan_cap)
    return {"config": {**tower.describe(), "nmax": args.nmax}, "report": rep, "ok": rep["ok"]}


def _sweep_cell(q: int, d: int, nmax: int, checks: tuple, scan_cap: int) -> dict:
    cell = {"q": q, "d": d}
    try:
        tower = build_tower(q, auto_ideal(q, d))
        cell["p_of_T"] = list(tower.ideal.mu)
        if "hpoly" in checks:
            cell["hpoly_ok"] = hpoly_report(tower, scan_cap)["ok"]
        if "tower" in checks:
            cell["tower_ok"] = tower_report(tower, H_lambda(tower), nmax, scan_cap)["ok"]
        cell["ok"] = all(v for k, v in cell.items() if k.endswith("_ok"))
    except SupersingularError as exc:
        cell["error"] = f"{type(exc).__name__}: {exc}"
        cell["ok"] = False
    return cell


def cmd_sweep(args) -> dict:
    checks = tuple(_checks(args.checks, SWEEP_CHECKS))
    qs = args.q if isinstance(args.q, list) else parse_int_list(args.q)
    ds = args.d if isinstance(args.d, list) else parse_int_list(args.d)
    grid = [(q, d) for q in qs for d in ds]
    job_args = [(q, d, args.nmax, checks, args.scan_cap) for q, d in grid]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            cells = list(pool.map(_sweep_cell, *zip(*job_args)))
    else:
        cells = [_sweep_cell(*a) for a in job_args]
    matrix = [[c["ok"] for c in cells[i * len(ds):(i + 1) * len(ds)]] for i in range(len(qs))]
    return {"config": {"q": qs, "d": ds, "nmax": args.nmax, "checks": list(checks)},
            "report": {"cells": cells, "matrix": {"rows_q": qs, "cols_d": ds, "ok": matrix}},
            "ok": all(c["ok"] for c in cells)}


COMMANDS = {"hpoly": cmd_hpoly, "keylemma": cmd_keylemma, "tower": cmd_tower, "sweep": cmd_sweep}


def _render(args, bundle: dict) -> str:
    if args.format == "csv":
        if args.command == "tower":
            tw = bundle["report"]
            rows = ratio_table(tw["q"], tw["d"], tw["omega"]["size"], len(tw["ratio_table"]))
            return ratio_table_csv(rows)
        if args.command == "sweep":
            lines = ["q,d,p_of_T,ok"]
            for c in bundle["report"]["cells"]:
                p = " ".join(map(str, c.get("p_of_T", [])))
                lines.append(f"{c['q']},{c['d']},{p},{str(c['ok']).lower()}")
            return "\n".join(lines) + "\n"
        raise argparse.ArgumentTypeError(f"csv output is not available for {args.command}")
    return json.dumps(bundle, indent=2, sort_keys=True) + "\n"


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    t0 = time.perf_counter()
    try:
        bundle = {"schema_version": SCHEMA_VERSION, "command": args.command}
        bundle.update(COMMANDS[args.command](args))
        if args.timing:
            bundle["seconds"] = round(time.perf_counter() - t0, 3)
        text = _render(args, bundle)
    except (SupersingularError, argparse.ArgumentTypeError, ValueError) as exc:
        err = {"schema_version": SCHEMA_VERSION, "command": args.command,
               "error": type(exc).__name__, "message": str(exc), "ok": False}
        print(json.dumps(err, sort_keys=True), file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if bundle["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())
