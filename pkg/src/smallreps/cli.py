"""Command-line front end: ``smallreps <command> ...``.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .classify import FIXTURE_LABEL, classify_all, identify_tannaka_candidates, parse_label, small_table
from .reps import DominantWeight, character, dimension
from .rootsys import DynkinType, build
from .squares import square_decompose
from .verify import TIERS, regenerate, run_checks, unified_diff

_EPS = {"+1": 1, "1": 1, "+": 1, "s": 1, "-1": -1, "-": -1, "a": -1}


class UsageError(Exception):
    pass


def _type(args) -> DynkinType:
    try:
        return DynkinType(args.family.upper(), args.rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _weight(text: str, rank: int) -> DominantWeight:
    try:
        lam = DominantWeight.parse(text)
    except ValueError:
        raise UsageError(f"weight must be comma-separated nonnegative integers, got {text!r}") from None
    if lam.rank != rank:
        raise UsageError(f"weight {text!r} has {lam.rank} coefficients, rank is {rank}")
    return lam


def _nonzero(lam: DominantWeight) -> DominantWeight:
    if lam.is_zero():
        raise UsageError("highest weight must be nonzero")
    return lam


def _eps(text: str) -> int:
    if text not in _EPS:
        raise UsageError(f"epsilon must be one of +1, -1, s, a; got {text!r}")
    return _EPS[text]


def _emit(args, doc: dict, text: str):
    if args.emit == "structured":
        print(json.dumps(doc, sort_keys=True))
    else:
        print(text)


def _head(dt: DynkinType, lam=None) -> dict:
    doc = {"type": dt.family, "rank": dt.rank}
    if lam is not None:
        doc["lambda"] = list(lam.a)
    return doc


def cmd_dim(args) -> int:
    dt = _type(args)
    lam = _weight(args.weight, dt.rank)
    rs = build(dt)
    d = dimension(rs, lam) if not lam.is_zero() else 1
    doc = _head(dt, lam)
    doc["dim"] = d
    if rs.is_super:
        doc["dim_total"] = character(rs, lam).dim_total()
        text = f"{dt} {lam}: superdim {d}, dim {doc['dim_total']}"
    else:
        text = f"{dt} {lam}: dim {d}"
    _emit(args, doc, text)
    return 0


def cmd_char(args) -> int:
    dt = _type(args)
    lam = _weight(args.weight, dt.rank)
    rs = build(dt)
    ch = character(rs, lam)
    rows = []
    for mu, (e, o) in sorted(ch.dominant.items(), key=lambda kv: (-rs.height(kv[0]), kv[0])):
        beta = rs.labels_to_beta(mu)
        rows.append({"labels": list(mu), "beta": [str(x) for x in beta], "even": e, "odd": o,
                     "orbit": rs.orbit_size(mu)})
    doc = _head(dt, lam)
    doc["weights"] = rows
    lines = [f"{dt} {lam}: {len(rows)} dominant weights"]
    for r in rows:
        lines.append(f"  labels ({','.join(map(str, r['labels']))})  even {r['even']}  odd {r['odd']}  orbit {r['orbit']}")
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_square(args) -> int:
    dt = _type(args)
    lam = _nonzero(_weight(args.weight, dt.rank))
    eps = _eps(args.epsilon)
    dec = square_decompose(build(dt), lam, eps)
    doc = _head(dt, lam)
    doc["epsilon"] = eps
    doc.update(dec.to_json())
    name = "S2" if eps == 1 else "L2"
    _emit(args, doc, f"{name} {dt} {lam} = {dec}")
    return 0


def cmd_classify(args) -> int:
    dt = _type(args)
    table = small_table(classify_all(build(dt), args.mode))
    entries = []
    lines = [f"{dt} small representations ({args.mode}):"]
    for lam, v in sorted(table.items(), key=lambda kv: kv[0].a):
        entries.append({"lambda": list(lam.a), "plus": FIXTURE_LABEL[v[1]], "minus": FIXTURE_LABEL[v[-1]]})
        lines.append(f"  {lam}: +: {FIXTURE_LABEL[v[1]]}  -: {FIXTURE_LABEL[v[-1]]}")
    doc = _head(dt)
    doc["mode"] = args.mode
    doc["small"] = entries
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_table(args) -> int:
    try:
        expected, computed = regenerate(args.table_id, args.max_rank)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    diff = unified_diff(expected, computed, args.table_id)
    if args.emit == "structured":
        print(json.dumps({"table": args.table_id, "max_rank": args.max_rank, "match": not diff,
                          "computed": computed, "diff": diff}, sort_keys=True))
    else:
        print("\n".join(diff) if diff else "\n".join(computed))
        print(f"table {args.table_id} up to rank {args.max_rank}: {'match' if not diff else 'MISMATCH'}")
    return 1 if diff else 0


def cmd_identify(args) -> int:
    if args.d < 1:
        raise UsageError("dimension must be >= 1")
    try:
        plus, minus = parse_label(args.plus), parse_label(args.minus)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    hits = identify_tannaka_candidates(args.d, plus, minus, args.mode)
    doc = {"d": args.d, "plus": args.plus, "minus": args.minus,
           "candidates": [{"type": dt.family, "rank": dt.rank, "lambda": list(lam.a)} for dt, lam in hits]}
    text = "\n".join(f"{dt} {lam}" for dt, lam in hits) or "no candidates"
    _emit(args, doc, text)
    return 0


def cmd_check(args) -> int:
    results = run_checks(args.tier)
    ok = all(r.ok for r in results)
    if args.emit == "structured":
        print(json.dumps({"tier": args.tier, "ok": ok, "suites": [
            {"name": r.name, "cases": r.count, "failures": r.failures} for r in results]}, sort_keys=True))
    else:
        for r in results:
            print(f"{'PASS' if r.ok else 'FAIL'} {r.name} ({r.count} cases)")
            for f in r.failures:
                print(f"    {f}")
    return 0 if ok else 1


def _add_type(p):
    p.add_argument("family", help="A, B, C, D, E, F, G or BC")
    p.add_argument("rank", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="smallreps", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--emit", choices=("text", "structured"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dim", help="(super)dimension of an irreducible")
    _add_type(p)
    p.add_argument("weight", help="beta coefficients, e.g. 1,0,0")
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("char", help="dominant weight multiplicities with parity")
    _add_type(p)
    p.add_argument("weight")
    p.set_defaults(func=cmd_char)

    p = sub.add_parser("square", help="decompose S^2 (+1, s) or the alternating square (-1, a)")
    _add_type(p)
    p.add_argument("weight")
    p.add_argument("epsilon", help="+1, -1, s or a")
    p.set_defaults(func=cmd_square)

    p = sub.add_parser("classify", help="small representations of one type")
    _add_type(p)
    p.add_argument("--mode", choices=("relaxed", "strict"), default="relaxed")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table", help="regenerate a table and diff it against the fixtures")
    p.add_argument("table_id", type=int)
    p.add_argument("max_rank", type=int)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("identify", help="types and weights of dimension D with given verdicts")
    p.add_argument("d", type=int)
    p.add_argument("plus", help="star, circle, notsmall or any")
    p.add_argument("minus")
    p.add_argument("--mode", choices=("relaxed", "strict"), default="relaxed")
    p.set_defaults(func=cmd_identify)

    p = sub.add_parser("check", help="run the invariant suites")
    p.add_argument("tier", choices=TIERS)
    p.set_defaults(func=cmd_check)

    # --emit is also accepted after the subcommand
    for sp in sub.choices.values():
        sp.add_argument("--emit", choices=("text", "structured"), default=argparse.SUPPRESS)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
