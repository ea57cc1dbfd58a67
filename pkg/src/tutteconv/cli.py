"""Command-line interface.

Exit status: 0 on success (and when every requested identity holds),
1 when a verification fails, 2 on usage errors and cap violations.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import catalog
from .identities import BI_CAP, IDENTITY_IDS, MULTI_CAP, MULTIVARIATE, duet_compare, verify
from .invariants import characteristic, rank_generating, size_corank, subset_corank, tutte
from .matroid import Matroid, MatroidError, from_json
from .poly import P, MultiPoly, format_rational, render, to_json, variable_from_name
from .qspace import (
    euler_expand,
    expected_distinguishers,
    expected_spanning,
    genfun_factorization_check,
    sc_closed_form,
)
from .random_models import closed_form_expectation, exact_expectation, monte_carlo

POLYS = {
    "subset-sc": subset_corank,
    "sc": size_corank,
    "rank-gen": rank_generating,
    "tutte-paper": lambda m: tutte(m, "paper"),
    "tutte-standard": lambda m: tutte(m, "standard"),
    "charpoly": characteristic,
}
STATS = {"char": "char_normalized", "sc": "sc_normalized", "contract": "contraction_char"}


class UsageError(Exception):
    pass


def load_matroid(spec: str) -> Matroid:
    """``catalog:NAME``, a path to a JSON file, or inline JSON."""
    if spec.startswith("catalog:"):
        return catalog.get(spec[len("catalog:"):])
    if spec.lstrip().startswith("{"):
        obj = json.loads(spec)
    elif os.path.exists(spec):
        with open(spec) as fh:
            obj = json.load(fh)
    else:
        raise UsageError(f"matroid {spec!r} is neither catalog:NAME, a JSON file, nor inline JSON")
    m = from_json(obj)
    if not m.name:
        m.name = obj.get("name", os.path.basename(spec) if not spec.startswith("{") else "")
    return m


def parse_number(text: str):
    if text.strip() == "p":
        return P
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected an exact number like 1/3, got {text!r}") from None


def parse_point(items):
    out = {}
    for item in items or []:
        for part in item.split(","):
            name, _, value = part.partition("=")
            if not value:
                raise UsageError(f"expected NAME=VALUE, got {part!r}")
            out[variable_from_name(name.strip())] = parse_number(value)
    return out


def _fmt(value) -> str:
    return render(value) if isinstance(value, MultiPoly) else format_rational(value)


def _emit(args, text: str, payload: dict):
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, indent=2, default=str))
    else:
        print(text)


# -- subcommands ----------------------------------------------------------------------

def cmd_compute(args) -> int:
    m = load_matroid(args.matroid)
    poly = POLYS[args.poly](m)
    _emit(args, render(poly), {"matroid": m.name, "poly": args.poly, "text": render(poly), "terms": to_json(poly)})
    return 0


def cmd_verify(args) -> int:
    if args.catalog:
        matroids = catalog.all_matroids()
    elif args.matroid:
        matroids = [load_matroid(args.matroid)]
    else:
        raise UsageError("verify needs --matroid or --catalog")
    ids = IDENTITY_IDS if args.identity == "all" else (args.identity.replace("-", "_"),)
    reports = []
    for m in matroids:
        for key in ids:
            cap = MULTI_CAP if key in MULTIVARIATE else BI_CAP
            if m.n > cap:
                if args.identity != "all":
                    raise MatroidError(
                        f"identity {key} is limited to {cap} elements; {m.name} has {m.n}"
                    )
                continue
            reports.append(verify(m, key))
    ok = all(r.equal for r in reports)
    if args.format == "json":
        print(json.dumps([r.to_dict(args.terms) for r in reports], indent=2))
    else:
        for r in reports:
            line = f"{r.matroid}\tidentity {r.identity}\tequal={str(r.equal).lower()}"
            if not args.catalog:
                line += f'\tlhs="{render(r.lhs)}"\trhs="{render(r.rhs)}"'
            print(line)
            if args.terms and r.terms:
                for t, p in r.terms:
                    print(f"  T={t}: {render(p)}")
        print(f"{sum(r.equal for r in reports)}/{len(reports)} identities verified")
    return 0 if ok else 1


def cmd_qspace(args) -> int:
    p = parse_number(args.p)
    kind = args.kind
    if kind == "closed-form":
        poly = sc_closed_form(args.d, args.q, args.space)
        _emit(args, render(poly), {"d": args.d, "q": args.q, "space": args.space, "sc": render(poly)})
        return 0
    if kind == "D":
        value = expected_distinguishers(args.d, p, args.q, args.s)
        _emit(args, _fmt(value), {"d": args.d, "p": _fmt(p), "q": args.q, "s": args.s, "D": _fmt(value)})
        return 0
    if kind == "sp":
        value = expected_spanning(args.d, p, args.q)
        _emit(args, _fmt(value), {"d": args.d, "p": _fmt(p), "q": args.q, "sp": _fmt(value)})
        return 0
    if kind == "euler":
        rep = euler_expand(args.s, args.q)
        text = f"product: {render(rep['product'])}\nsum:     {render(rep['sum'])}\nequal={str(rep['equal']).lower()}"
        _emit(args, text, {k: (render(v) if isinstance(v, MultiPoly) else v) for k, v in rep.items()})
        return 0 if rep["equal"] else 1
    if kind == "genfun":
        if isinstance(p, MultiPoly):
            raise UsageError("genfun needs a numeric --p")
        rep = genfun_factorization_check(args.d_max, args.q, args.s, p, args.which)
        lines = [f"z^{c['k']}: lhs={render(c['lhs'])}  rhs={render(c['rhs'])}" for c in rep["coefficients"]]
        lines.append(f"equal={str(rep['equal']).lower()}")
        payload = dict(rep)
        payload["coefficients"] = [
            {"k": c["k"], "lhs": render(c["lhs"]), "rhs": render(c["rhs"])} for c in rep["coefficients"]
        ]
        _emit(args, "\n".join(lines), payload)
        return 0 if rep["equal"] else 1
    raise UsageError(f"unknown qspace computation {kind!r}")


def cmd_random(args) -> int:
    m = load_matroid(args.matroid)
    p = parse_number(args.p)
    stat = STATS[args.stat]
    if args.kind == "expect":
        poly = exact_expectation(m, p, stat)
    elif args.kind == "closed-form":
        poly = closed_form_expectation(m, p, stat)
    else:
        if args.trials is None:
            raise UsageError("mc needs --trials")
        res = monte_carlo(m, p, stat, parse_point(args.at), args.trials, args.seed)
        text = f"estimate={format_rational(res.estimate)} (~{float(res.estimate):.6g}) stderr={res.stderr:.6g} trials={res.trials}"
        _emit(args, text, {"estimate": format_rational(res.estimate), "stderr": res.stderr, "trials": res.trials, "seed": res.seed})
        return 0
    point = parse_point(args.at)
    if point:
        poly = poly.substitute(point)
    _emit(args, render(poly), {"matroid": m.name, "stat": stat, "value": render(poly)})
    return 0


def cmd_duets(args) -> int:
    m = load_matroid(args.matroid)
    rep = duet_compare(m, args.s, args.t)
    if args.format == "json":
        print(json.dumps(rep, indent=2))
        return 0
    print(f"matroid {rep['matroid']}  r={rep['r']}  s={rep['s']}  t={rep['t']}")
    print(f"R(M;t,s) = {rep['R(t,s)']}    R(M;-t,-s) = {rep['R(-t,-s)']}")
    print("T\t#u\t#v(R|T columns)\t#v(support = T)")
    for row in rep["counts"]:
        print(f"{row['T']}\t{row['u']}\t{row['v_columns']}\t{row['v_supported']}")
    for c in rep["conventions"]:
        print(
            f"sign={c['sign_convention']:<19} v={c['reading']:<12} (-1)^r*sum={c['value']:>6}"
            f"  matches R(t,s): {str(c['matches_R(t,s)']).lower():<5}"
            f"  matches R(-t,-s): {str(c['matches_R(-t,-s)']).lower()}"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tutteconv", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("compute", help="compute a polynomial invariant")
    p.add_argument("--matroid", required=True)
    p.add_argument("--poly", required=True, choices=sorted(POLYS))
    fmt(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="verify identities exactly")
    p.add_argument("--identity", required=True, choices=list(IDENTITY_IDS) + ["eq4-cyclic", "all"])
    p.add_argument("--matroid")
    p.add_argument("--catalog", action="store_true", help="run on every catalog matroid")
    p.add_argument("--terms", action="store_true", help="print the per-T breakdown")
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("qspace", help="q-analog closed forms")
    p.add_argument("kind", choices=("closed-form", "D", "sp", "euler", "genfun"))
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--p", default="1/3", help="probability NUM/DEN, or 'p' for symbolic")
    p.add_argument("--space", choices=("affine", "projective"), default="affine")
    p.add_argument("--which", choices=("D", "sp", "sc"), default="D")
    p.add_argument("--d-max", type=int, default=4)
    fmt(p)
    p.set_defaults(func=cmd_qspace)

    p = sub.add_parser("random", help="random submatroid and contraction expectations")
    p.add_argument("kind", choices=("expect", "closed-form", "mc"))
    p.add_argument("--matroid", required=True)
    p.add_argument("--stat", choices=sorted(STATS), required=True)
    p.add_argument("--p", required=True)
    p.add_argument("--at", action="append", help="evaluation point, e.g. l=2 (repeatable)")
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=0)
    fmt(p)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("duets", help="(s,t)-duet evidence table")
    p.add_argument("--matroid", required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    fmt(p)
    p.set_defaults(func=cmd_duets)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, MatroidError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
