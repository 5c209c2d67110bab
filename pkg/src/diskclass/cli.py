"""Command-line front end.

Every subcommand prints a JSON report (pretty by default, canonical
single-line with --json) that echoes its full effective configuration, so
any run can be reproduced from its own output.  Exit codes: 0 success/IN,
3 OUT, 4 BOUNDARY, 2 usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .catalog import DiskFunction, catalog_ids, make_catalog
from .errors import DiskClassError
from .explorer import (
    ALPHA_GRID,
    CAMPAIGNS,
    LADDER,
    CampaignConfig,
    run_campaign,
    write_rows_csv,
)
from .hankel import hankel_det
from .membership import CLASS_TAGS, ScanPolicy, radius_of, test_class
from .operators import decompose, g_transform, u_operator
from .serialize import canonical_json

VERDICT_EXIT = {"IN": 0, "OUT": 3, "BOUNDARY": 4}


def _fmt(x) -> str:
    return f"{float(x):.17g}"


def _emit(payload: dict, args) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(canonical_json(payload) + "\n")
        return
    if getattr(args, "json", False):
        print(canonical_json(payload))
    else:
        print(json.dumps(_jsonable(payload), indent=2, sort_keys=True))


def _jsonable(obj):
    from .serialize import _canon

    return _canon(obj)


def _policy_from(args) -> ScanPolicy:
    kw = {}
    if getattr(args, "r_max", None) is not None:
        kw["r_max"] = args.r_max
    if getattr(args, "grid", None) is not None:
        kw["grid"] = args.grid
    if getattr(args, "delta", None) is not None:
        kw["delta"] = args.delta
    return ScanPolicy(**kw)


def _function_from(args) -> DiskFunction:
    order = getattr(args, "order", None) or 64
    if getattr(args, "series_file", None):
        with open(args.series_file, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        from .series import ComplexSeries

        f = DiskFunction.from_series(ComplexSeries.from_json_dict(data))
    elif getattr(args, "id", None):
        params = {"b": args.b} if args.id == "fb" else None
        if args.id == "fb" and args.b is None:
            raise DiskClassError("--id fb requires --b")
        f = make_catalog(args.id, params, order=order)
    else:
        raise DiskClassError("provide --id or --series-file")
    if getattr(args, "of_g", False):
        f = g_transform(f)
    return f


def _fn_flags(sub, with_order=True):
    sub.add_argument("--id", help="catalog id (see the catalog subcommand)")
    sub.add_argument("--b", type=float, help="parameter of the fb family")
    sub.add_argument("--series-file", help="JSON file with a Taylor series")
    sub.add_argument("--of-g", action="store_true",
                     help="apply the normalized transform g before testing")
    if with_order:
        sub.add_argument("--order", type=int, default=64)


def _policy_flags(sub):
    sub.add_argument("--grid", type=int, help="circle grid size (default 4096)")
    sub.add_argument("--r-max", type=float, help="scan radius (default 1 - 2^-10)")
    sub.add_argument("--delta", type=float, help="verdict margin (default 1e-6)")


def _out_flags(sub):
    sub.add_argument("--json", action="store_true",
                     help="canonical single-line JSON instead of pretty")
    sub.add_argument("--out", help="write the report to this file")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="diskclass",
        description="Numerical toolkit for a class of non-vanishing "
                    "normalized analytic functions on the unit disk.")
    subs = p.add_subparsers(dest="command", required=True)

    s = subs.add_parser("membership", help="three-way class membership verdict")
    _fn_flags(s)
    s.add_argument("--class", dest="class_tag", required=True,
                   help=f"one of {', '.join(CLASS_TAGS)}")
    s.add_argument("--alpha", type=float, help="alpha for the mocanu family")
    _policy_flags(s)
    _out_flags(s)

    s = subs.add_parser("hankel", help="Hankel determinant of Taylor coefficients")
    _fn_flags(s)
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    _out_flags(s)

    s = subs.add_parser("radius", help="largest radius on which a property holds")
    _fn_flags(s)
    s.add_argument("--class", dest="class_tag", required=True)
    s.add_argument("--alpha", type=float)
    s.add_argument("--tol", type=float, default=1e-4)
    _policy_flags(s)
    _out_flags(s)

    s = subs.add_parser("campaign", help="seeded randomized campaign")
    s.add_argument("--kind", choices=CAMPAIGNS)
    s.add_argument("--samples", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--order", type=int)
    s.add_argument("--a2", help="range lo:hi of |a2|")
    s.add_argument("--shrink", type=float)
    s.add_argument("--threads", type=int, default=1)
    s.add_argument("--config", help="JSON file mirroring the campaign config")
    s.add_argument("--csv", help="also write per-sample rows to this CSV file")
    _policy_flags(s)
    _out_flags(s)

    s = subs.add_parser("decompose", help="split f into (a2, omega1, c1..c3)")
    _fn_flags(s)
    _out_flags(s)

    s = subs.add_parser("eval", help="evaluate f and its functionals at a point")
    _fn_flags(s)
    s.add_argument("point", help="complex point, e.g. 0.99 or 0.3+0.4j or 0.3,0.4")
    _out_flags(s)

    s = subs.add_parser("catalog", help="list built-in function ids")
    _out_flags(s)

    return p


def _parse_point(text: str) -> complex:
    try:
        return complex(text)
    except ValueError:
        pass
    try:
        re_s, im_s = text.split(",")
        return complex(float(re_s), float(im_s))
    except ValueError as exc:
        raise DiskClassError(f"cannot parse point {text!r}") from exc


def _parse_range(text: str):
    lo, sep, hi = text.partition(":")
    if not sep:
        raise DiskClassError(f"--a2 expects lo:hi, got {text!r}")
    return (float(lo), float(hi))


def _echo_function(args) -> dict:
    if getattr(args, "series_file", None):
        return {"series_file": args.series_file, "of_g": bool(args.of_g)}
    return {"id": args.id, "b": args.b, "of_g": bool(getattr(args, "of_g", False)),
            "order": getattr(args, "order", None)}


def cmd_membership(args) -> int:
    f = _function_from(args)
    policy = _policy_from(args)
    report = test_class(f, args.class_tag, policy, alpha=args.alpha)
    payload = {"config": {"function": _echo_function(args),
                          "class": args.class_tag, "alpha": args.alpha,
                          "policy": policy.to_dict()},
               **report.to_dict()}
    _emit(payload, args)
    return VERDICT_EXIT[report.verdict]


def cmd_hankel(args) -> int:
    f = _function_from(args)
    rep = hankel_det(f, args.q, args.n)
    payload = {"config": {"function": _echo_function(args),
                          "q": args.q, "n": args.n},
               **rep.to_dict()}
    _emit(payload, args)
    return 0


def cmd_radius(args) -> int:
    f = _function_from(args)
    policy = _policy_from(args)
    res = radius_of(f, args.class_tag, tol=args.tol, policy=policy,
                    alpha=args.alpha)
    payload = {"config": {"function": _echo_function(args),
                          "class": args.class_tag, "alpha": args.alpha,
                          "tol": args.tol, "policy": policy.to_dict()},
               **res.to_dict()}
    _emit(payload, args)
    return 0


def cmd_campaign(args) -> int:
    base = {}
    if args.config:
        with open(args.config, "r", encoding="utf-8") as fh:
            base = json.load(fh)
    overrides = {
        "campaign": args.kind,
        "samples": args.samples,
        "seed": args.seed,
        "order": args.order,
        "shrink": args.shrink,
    }
    base.update({k: v for k, v in overrides.items() if v is not None})
    if args.a2:
        base["a2_range"] = _parse_range(args.a2)
    policy_kw = dict(base.get("policy") or {})
    for name, key in (("r_max", "r_max"), ("grid", "grid"), ("delta", "delta")):
        val = getattr(args, name, None)
        if val is not None:
            policy_kw[key] = val
    if policy_kw:
        base["policy"] = policy_kw
    if "campaign" not in base:
        raise DiskClassError("campaign kind missing: pass --kind or --config")
    cfg = CampaignConfig.from_dict(base)
    report = run_campaign(cfg, threads=args.threads, keep_rows=bool(args.csv))
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            write_rows_csv(report, fh)
        report.pop("per_sample", None)
    _emit(report, args)
    return 0


def cmd_decompose(args) -> int:
    f = _function_from(args)
    payload = {"config": {"function": _echo_function(args)},
               **decompose(f).to_dict()}
    _emit(payload, args)
    return 0


def cmd_eval(args) -> int:
    f = _function_from(args)
    z = _parse_point(args.point)
    u_fn, _ = u_operator(f)
    payload = {
        "config": {"function": _echo_function(args),
                   "point": [z.real, z.imag]},
        "f": [complex(f.eval_f(z)).real, complex(f.eval_f(z)).imag],
        "f_prime": [complex(f.eval_f1(z)).real, complex(f.eval_f1(z)).imag],
        "f_second": [complex(f.eval_f2(z)).real, complex(f.eval_f2(z)).imag],
        "quotient_h": [complex(f.h(z)).real, complex(f.h(z)).imag],
        "deviation_u": [complex(u_fn(z)).real, complex(u_fn(z)).imag],
        "deviation_u_abs": abs(complex(u_fn(z))),
    }
    _emit(payload, args)
    return 0


def cmd_catalog(args) -> int:
    entries = []
    for cid in catalog_ids():
        entry = {"id": cid}
        if cid == "fb":
            entry["params"] = {"b": "(0, 2] required"}
        entries.append(entry)
    _emit({"catalog": entries}, args)
    return 0


_COMMANDS = {
    "membership": cmd_membership,
    "hankel": cmd_hankel,
    "radius": cmd_radius,
    "campaign": cmd_campaign,
    "decompose": cmd_decompose,
    "eval": cmd_eval,
    "catalog": cmd_catalog,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except DiskClassError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
