"""Command line: ``expcrit analyze | construct | audit | list-families``.

Exit status: 0 success, 1 failed assertion or rejected construction,
2 usage or parse error, 3 cap exceeded (for ``audit``, only with ``--strict``).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections import Counter

from .audit import SUITES, run_suite
from .dsl import build, parse_spec
from .errors import CapExceeded, ExpCritError, SpecSyntaxError
from .witness import analyze

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3

FAMILIES = (
    ("cyclic N | dihedral N | quaternion N", "cyclic, dihedral and dicyclic groups of order N"),
    ("sym N | alt N", "symmetric and alternating groups of degree N"),
    ("abelian N1 N2 ...", "direct product of cyclic groups"),
    ('perm "(1 2 3)" "(1 2)" ...', "group generated by permutations (1-based cycles)"),
    ("extraspecial q n +|-", "extraspecial group of order q^(1+2n)"),
    ("mnapq p= k= q= [b=]", "minimal non-abelian (Z_p)^k : Z_(q^b)"),
    ("familyB p= a= mna=(spec)", "Z_(p^a) x a two-prime minimal non-abelian group"),
    ("familyC1 p= a= q_mna=(spec)", "Z_(p^a) x a minimal non-abelian q-group"),
    ("familyC2 p= m= k= q= [n=]", "(Z_(p^m))^k : Z_(q^n), irreducible action of order q"),
    ("familyC3 p= m= k= q= [n=]", "(Z_(p^m) x (Z_p)^k) : Z_(q^n), m > 1"),
    ("familyC4 q= shape=elementary k= p= a=", "(Z_q)^k : Z_(p^a), irreducible action"),
    ("familyC4 q= shape=extraspecial sign=+|- p= a=", "q^(1+2) : Z_(p^a), trivial on the centre"),
    ("typeB p= alpha= beta= rho= sigma=", "two-generator p-group with derived subgroup of order p"),
    ("U p= m= | UmodD p= m= | UmodN p= m= index=", "universal type-A group and its quotients"),
    ("present <a, b | rel, ...>", "finitely presented group via coset enumeration"),
    ("directprod(spec, spec) | quotient(spec, center|derived|frattini|ids ...)", "combinators"),
)


def _dump(doc):
    return json.dumps(doc, sort_keys=True, indent=2)


def analysis_document(text, stable=False):
    start = time.perf_counter()
    G = build(text)
    r = analyze(G)
    doc = {"spec": text}
    doc.update(r.as_dict())
    if not stable:
        doc["elapsed_seconds"] = round(time.perf_counter() - start, 3)
    return doc


def _format_factorization(fact):
    return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in sorted((int(p), e) for p, e in fact.items())) or "1"


def cmd_analyze(args, out):
    doc = analysis_document(args.spec, stable=args.stable)
    if args.json:
        print(_dump(doc), file=out)
        return EXIT_OK
    print(f"group      {args.spec}", file=out)
    print(f"order      {doc['order']} = {_format_factorization(doc['factorization'])}", file=out)
    print(f"exponent   {doc['exponent']}", file=out)
    print(f"abelian    {str(doc['abelian']).lower()}", file=out)
    if doc["witnesses"]:
        print(f"{'prime':>6} {'p-part':>7} {'witness':>8} {'order':>6} {'exp':>6}", file=out)
        for w in doc["witnesses"]:
            found = "yes" if w["found"] else "no"
            order = w["witness_order"] if w["found"] else "-"
            ex = w["witness_exponent"] if w["found"] else "-"
            print(f"{w['prime']:>6} {w['p_part']:>7} {found:>8} {order:>6} {ex:>6}", file=out)
    print(f"exponent-critical  {str(doc['critical']).lower()}", file=out)
    print(f"type       {doc['type']}", file=out)
    if "elapsed_seconds" in doc:
        print(f"time       {doc['elapsed_seconds']} s", file=out)
    return EXIT_OK


def cmd_construct(args, out):
    G = build(args.spec)
    print(f"group      {args.spec}", file=out)
    print(f"order      {G.order}", file=out)
    print(f"degree     {G.degree}", file=out)
    print(f"generators {len(G.generators)}", file=out)
    for i, g in enumerate(G.generators):
        print(f"  g{i} = {g.cycle_string(one_based=True)}", file=out)
    if args.orders:
        hist = Counter(G.orders.tolist())
        print("element orders", file=out)
        for k in sorted(hist):
            print(f"  {k:>6}: {hist[k]}", file=out)
    return EXIT_OK


def _coerce(value):
    try:
        return int(value)
    except ValueError:
        return value


def parse_params(tokens):
    params = {}
    for tok in tokens:
        if "=" not in tok:
            raise SpecSyntaxError(f"expected key=value, got {tok!r}", 0)
        k, v = tok.split("=", 1)
        params[k] = v if k == "spec" else _coerce(v)
    if "spec" in params:
        parse_spec(params["spec"])
    return params


def cmd_audit(args, out):
    params = parse_params(args.params)
    report = run_suite(args.suite, params)
    if args.json:
        print(_dump(report.as_dict(stable=args.stable)), file=out)
    else:
        for c in report.checks:
            line = f"[{c.status.upper():4}] {args.suite}: {c.label} | {c.subject}"
            if c.detail and c.status != "pass":
                line += f" | {c.detail}"
            print(line, file=out)
        s = report.summary()
        tail = "" if args.stable else f" in {report.elapsed:.1f} s"
        print(f"{args.suite}: {s['pass']} passed, {s['fail']} failed, {s['skip']} skipped{tail}", file=out)
    if report.failures:
        return EXIT_FAIL
    if args.strict and report.skips:
        return EXIT_CAP
    return EXIT_OK


def cmd_list_families(args, out):
    width = max(len(s) for s, _ in FAMILIES)
    for syntax, desc in FAMILIES:
        print(f"{syntax:<{width}}  {desc}", file=out)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="expcrit", description="Exponent-critical finite groups.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="witness search and classification for one group")
    p.add_argument("spec")
    p.add_argument("--json", action="store_true")
    p.add_argument("--stable", action="store_true", help="omit timing fields")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", help="build a group and list its generators")
    p.add_argument("spec")
    p.add_argument("--orders", action="store_true", help="print the element-order histogram")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("audit", help="run an audit suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("params", nargs="*", help="key=value, e.g. p=2 m=3 or spec=\"dihedral 16\"")
    p.add_argument("--json", action="store_true")
    p.add_argument("--strict", action="store_true", help="treat skipped checks as an error (exit 3)")
    p.add_argument("--stable", action="store_true", help="omit timing fields")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("list-families", help="list the group constructors of the spec language")
    p.set_defaults(func=cmd_list_families)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except SpecSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ExpCritError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
