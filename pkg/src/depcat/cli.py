"""Command-line interface: ``depcat gen``, ``depcat check``, ``depcat report``."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .document import load, save
from .errors import DepcatError, LayerMissing
from .famcat import DEFAULT_BUDGET
from .instances import KINDS, InstanceSpec, generate
from .suites import SUITES, find_mutation, run_suites

EXIT_PASS, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

ALIASES = {"max_object_size": "max_size", "max": "max_size", "cap": "fiber_cap", "mod": "modulus"}

EPILOG = f"""\
exit status: 0 all laws pass, 1 some law fails, 2 input error.

environment:
  DEPCAT_BUDGET  enumeration budget (default {DEFAULT_BUDGET}); bounds the object
                 sizes enumerated for intensional (topos) families and, when set,
                 the product-based checks of the counts and exdo2 suites.

examples:
  depcat gen finset max_size=3 fiber_cap=1 -o fs.json
  depcat gen ring modulus=4 -o z4.json
  depcat check fs.json --suites sigma,dep,depsigma
  depcat check fs.json --mutate s2
  depcat report z4.json --format json
"""


def _value(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def parse_params(items) -> dict:
    params = {}
    for item in items:
        key, sep, val = item.partition("=")
        if not sep or not key:
            raise ValueError(f"parameter {item!r} is not KEY=VALUE")
        params[ALIASES.get(key, key)] = _value(val)
    return params


def _budget(args) -> int | None:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("DEPCAT_BUDGET")
    return int(env) if env else None


def _suites(text):
    if text is None:
        return None
    names = [s.strip() for s in text.split(",") if s.strip()]
    if not names:
        raise ValueError("--suites needs at least one suite name")
    return names


def _emit(report, fmt: str) -> None:
    sys.stdout.write(report.to_json() if fmt == "json" else report.to_text())


def cmd_gen(args) -> int:
    params = parse_params(args.params)
    if "budget" not in params and params.get("fam") == "topos":
        b = _budget(args)
        if b is not None:
            params["budget"] = b
    doc = generate(InstanceSpec(args.kind, params))
    save(doc, args.output)
    summary = doc.summary()
    print(" ".join(f"{k}={v}" for k, v in summary.items()))
    for note in doc.notes:
        print(f"note: {note}")
    return EXIT_PASS


def cmd_check(args) -> int:
    doc = load(args.file)
    budget = _budget(args)
    if args.mutate:
        res = find_mutation(doc, args.mutate, budget=budget)
        if not res.applied:
            print(f"no mutation for {args.mutate} applies to this document", file=sys.stderr)
            return EXIT_INPUT
        if res.detected:
            e = next(e for e in res.report.entries if e.law == args.mutate and not e.passed)
            print(f"mutation {res.description}: detected by {e.law} (candidate {res.tried})")
            print(f"witness {json.dumps(e.as_dict()['witness'])} {e.detail}".rstrip())
            return EXIT_PASS
        print(f"{res.tried} mutation(s) for {args.mutate} went undetected", file=sys.stderr)
        return EXIT_FAIL
    report = run_suites(doc, _suites(args.suites), budget=budget, jobs=args.jobs)
    _emit(report, args.format)
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_report(args) -> int:
    doc = load(args.file)
    report = run_suites(doc, _suites(args.suites), budget=_budget(args), jobs=args.jobs)
    _emit(report, args.format)
    return EXIT_PASS if report.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="depcat",
        description="Generate and law-check finite fam-, Sigma- and dependent-arrow structures.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--budget", type=int, default=None, help="enumeration budget (overrides DEPCAT_BUDGET)")

    g = sub.add_parser("gen", help="generate a structure document", epilog=EPILOG,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    g.add_argument("kind", choices=[k for k in KINDS if k != "file"])
    g.add_argument("params", nargs="*", metavar="KEY=VALUE",
                   help="kind parameters; values are JSON (e.g. table=[[0,1],[1,0]])")
    g.add_argument("-o", "--output", required=True)
    common(g)
    g.set_defaults(func=cmd_gen)

    for name, func, helptext in (
        ("check", cmd_check, "run law suites on a document"),
        ("report", cmd_report, "emit the law report of a document"),
    ):
        c = sub.add_parser(name, help=helptext, epilog=EPILOG, formatter_class=argparse.RawDescriptionHelpFormatter)
        c.add_argument("file")
        c.add_argument("--suites", help=f"comma-separated subset of: {','.join(SUITES)}")
        c.add_argument("--jobs", type=int, default=1, help="worker processes (report is identical for any value)")
        c.add_argument("--format", choices=("text", "json"), default="text")
        common(c)
        if name == "check":
            c.add_argument("--mutate", metavar="LAW", help="apply single-entry mutations aimed at LAW; "
                           "exit 0 if one is detected, 1 if none is, 2 if none applies")
        c.set_defaults(func=func)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DepcatError, ValueError, KeyError, OSError) as exc:
        kind = type(exc).__name__
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {kind}: {msg}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
