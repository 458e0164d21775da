"""Command-line interface: eval, verify, seq, poly, walk, bench.

Exit status is 0 when every requested check passed, 1 on a mismatch and 2 on
a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from . import closed_forms as cf
from .exact import RatFunc, format_poly
from .gamma import gamma_funcs, omega
from .oracle import SumFamily, SumSpec
from .tuenter import p_poly, q_poly
from .verify import (FAMILIES, SEQUENCE_FAMILIES, BenchMismatch, RangeGuardError, bench,
                     default_campaign, emit_sequence, even_integrality_check, parse_range,
                     verify_identity)
from .walk import estimate_expectation, make_config
from .weights import WeightSyntaxError, parse_weight


class UsageError(Exception):
    pass


def _ints(text: Optional[str], name: str) -> List[int]:
    if text is None:
        raise UsageError(f"--{name} is required")
    try:
        return parse_range(text)
    except ValueError:
        raise UsageError(f"--{name}: cannot parse {text!r}") from None


def _one(text: Optional[str], name: str) -> int:
    vals = _ints(text, name)
    if len(vals) != 1:
        raise UsageError(f"--{name} takes a single integer here")
    return vals[0]


def _coeffs(p) -> str:
    return "[" + ", ".join(str(c) for c in p.coeffs) + "]"


def _ratfunc_line(label: str, f: RatFunc) -> str:
    num, den = f.integer_parts()
    return f"{label} = {_coeffs(num)}/{_coeffs(den)}    # ({format_poly(num)})/({format_poly(den)})"


def cmd_eval(args) -> int:
    fam = args.family.upper()
    try:
        family = SumFamily(fam)
    except ValueError:
        raise UsageError(f"unknown sum family {args.family!r}; "
                         f"choose from {', '.join(f.value for f in SumFamily)}") from None
    kw = {}
    if family is SumFamily.GENERIC:
        dims = _ints(args.dims, "dims")
        if args.weight is None:
            raise UsageError("--weight is required for GENERIC")
        kw = dict(n_list=tuple(dims), weight=parse_weight(args.weight, len(dims)))
    else:
        for name in ("n", "m", "alpha", "beta"):
            val = getattr(args, name.replace("-", "_"))
            if val is not None:
                kw[name] = _one(val, name)
    value = SumSpec(family, **kw).evaluate()
    args.emit(str(value))
    return 0


def _campaign_ranges(family: str, args) -> dict:
    fam = FAMILIES[cf.IdentityTag(family)]
    ranges = {}
    for p in fam.params:
        ranges[p] = _ints(getattr(args, p), p)
    return ranges


def cmd_verify(args) -> int:
    fam = args.family.upper()
    if fam == "ALL":
        plan = default_campaign()
    elif fam == "W_EVEN_INTEGRALITY":
        rep = even_integrality_check(_one(args.r, "r"))
        args.emit(rep.render(args.format))
        return 0 if rep.passed else 1
    else:
        try:
            cf.IdentityTag(fam)
        except ValueError:
            raise UsageError(f"unknown family {args.family!r}; choose from "
                             f"{', '.join(t.value for t in cf.IdentityTag)}, ALL") from None
        plan = [(fam, _campaign_ranges(fam, args))]
    ok = True
    chunks = []
    for family, ranges in plan:
        rep = verify_identity(family, **ranges)
        ok = ok and rep.passed
        chunks.append(rep.render(args.format))
    args.emit("\n".join(chunks))
    return 0 if ok else 1


def cmd_seq(args) -> int:
    if args.family not in SEQUENCE_FAMILIES:
        raise UsageError(f"unknown sequence family {args.family!r}; "
                         f"choose from {', '.join(SEQUENCE_FAMILIES)}")
    fmt = args.format if args.format != "text" else "bfile"
    args.emit(emit_sequence(args.family, _one(args.n_max, "n-max"), fmt))
    return 0


def cmd_poly(args) -> int:
    fam = args.family.lower()
    lines = []
    if fam in ("p", "q"):
        for beta in _ints(args.beta, "beta"):
            p = (p_poly if fam == "p" else q_poly)(beta)
            lines.append(f"{fam.upper()}_{beta} = {_coeffs(p)}    # {format_poly(p)}")
    elif fam == "gamma":
        for k in _ints(args.k, "k"):
            table = gamma_funcs(k)
            for j in range(k + 1):
                lines.append(_ratfunc_line(f"gamma_{k},{j}", table[j]))
    elif fam == "omega":
        for k in _ints(args.k, "k"):
            lines.append(_ratfunc_line(f"omega_{k}", omega(k).omega))
    else:
        raise UsageError("poly --family must be one of P, Q, gamma, omega")
    args.emit("\n".join(lines))
    return 0


def cmd_walk(args) -> int:
    dims = _ints(args.dims, "dims")
    if args.weight is None:
        raise UsageError("--weight is required")
    cfg = make_config(dims, args.weight, samples=args.samples, seed=args.seed)
    res = estimate_expectation(cfg)
    record = {"dims": dims, "weight": args.weight, "samples": args.samples,
              "seed": args.seed, "mean": res.mean, "std_error": res.std_error,
              "exact": None if res.exact is None else str(res.exact)}
    ok = True
    if res.exact is not None:
        ok = res.within(5.0)
        record["within_5_sigma"] = ok
    if args.format == "jsonl":
        args.emit(json.dumps(record, sort_keys=True))
    else:
        args.emit("\n".join(f"{k}: {v}" for k, v in record.items()))
    return 0 if ok else 1


def cmd_bench(args) -> int:
    fam = args.family.upper()
    try:
        tag = cf.IdentityTag(fam)
    except ValueError:
        raise UsageError(f"unknown family {args.family!r}") from None
    extra = {p: _one(getattr(args, p), p) for p in FAMILIES[tag].params if p != "n"}
    rec = bench(tag, _one(args.n, "n"), args.repetitions, **extra)
    d = rec.as_dict()
    if args.format == "jsonl":
        args.emit(json.dumps(d, sort_keys=True))
    else:
        args.emit("\n".join(f"{k}: {v}" for k, v in d.items()))
    return 0 if rec.equal else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abssum", description="Exact binomial sums with absolute-value weights.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("text", "jsonl", "csv")):
        p.add_argument("--family", required=True)
        for name in ("alpha", "beta", "n", "m", "k", "r"):
            p.add_argument(f"--{name}", help="integer, 'a:b' (inclusive) or comma list")
        p.add_argument("--n-max")
        p.add_argument("--weight")
        p.add_argument("--dims", help="comma-separated half step counts n_i")
        p.add_argument("--samples", type=int, default=100_000)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", help="write output to this file instead of stdout")
        return p

    common(sub.add_parser("eval", help="evaluate one sum exactly")).set_defaults(func=cmd_eval)
    common(sub.add_parser("verify", help="check closed forms against the oracle")).set_defaults(
        func=cmd_verify)
    common(sub.add_parser("seq", help="emit a centered double-sum sequence"),
           formats=("bfile", "csv", "jsonl")).set_defaults(func=cmd_seq)
    common(sub.add_parser("poly", help="print P, Q, gamma or omega")).set_defaults(func=cmd_poly)
    walk = common(sub.add_parser("walk", help="Monte Carlo random-walk estimate"),
                  formats=("text", "jsonl"))
    walk.set_defaults(func=cmd_walk, family="GENERIC")
    for action in walk._actions:
        if action.dest == "family":
            action.required = False
    b = common(sub.add_parser("bench", help="time oracle against closed form"),
               formats=("text", "jsonl"))
    b.add_argument("--repetitions", type=int, default=3)
    b.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out_chunks: List[str] = []
    args.emit = out_chunks.append
    try:
        code = args.func(args)
    except (UsageError, WeightSyntaxError, RangeGuardError) as exc:
        print(f"abssum: error: {exc}", file=sys.stderr)
        return 2
    except BenchMismatch as exc:
        print(f"abssum: mismatch: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"abssum: error: {exc}", file=sys.stderr)
        return 2
    text = "\n".join(out_chunks)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
