"""Command line interface: ``python -m palsum <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from .decompose import check_range, decompose, verify, Decomposition, Provenance
from .digits import DigitError, DigitString, parse, render
from .oracle import brute_two_int, count_two_sums, family_members, write_counts_csv


class UsageError(Exception):
    pass


def _radix(args):
    if args.radix is None:
        return 10
    if args.radix not in (10, args.base):
        raise UsageError(f"--radix must be 10 or the base {args.base}")
    return args.radix


def _number(text, args, what="n"):
    try:
        return parse(text, args.base, _radix(args))
    except DigitError as exc:
        raise UsageError(f"malformed {what} {text!r}: {exc}") from None


def _trace_lines(d: Decomposition, radix):
    prov = d.provenance
    lines = []
    tr = prov.trace or {}
    if "k" in tr:
        g = d.n.base
        lines.append(f"shifted by k = {tr['k']}: n' = {render(DigitString.from_int(tr['n_prime'], g), radix)}")
        lines.append(f"n' has type {tr['inner_type']}, algorithm {tr['inner_algorithm']} ({tr['reduced_case']})")
    state = tr.get("state")
    if not state:
        return lines
    width = len(d.n) + 1

    def row(label, digits):
        text = " ".join(f"{v:>2}" for v in digits)
        return f"{label:>10} " + text.rjust(3 * width)

    if "k" in tr:
        g = d.n.base
        lines.append(row("n'", DigitString.from_int(tr["n_prime"], g).msd()))
    else:
        lines.append(row("n", d.n.msd()))
    temp = state.get("temporary")
    if temp:
        for i, r in enumerate(temp, 1):
            lines.append(row(f"temp p{i}", r))
    lines.append(f"  x: {state['x']}")
    lines.append(f"  y: {state['y']}")
    lines.append(f"  z: {state['z']}")
    lines.append(f"  carries: {state['carries']}")
    lines.append(f"  case: {state['case']}")
    if "k" in tr:
        lines.append(row("n", d.n.msd()))
    for i, p in enumerate(d.parts, 1):
        lines.append(row(f"p{i}", p.msd()))
    return lines


def cmd_decompose(args):
    ds = _number(args.n, args)
    if ds.is_zero():
        raise UsageError("n must be positive")
    if args.base < 5:
        raise UsageError("the constructive decomposition needs base >= 5")
    d = decompose(ds, trace=args.trace)
    radix = _radix(args)
    if args.format == "json":
        out = d.to_dict(radix)
        if args.trace and d.provenance.trace:
            out["trace"] = d.provenance.trace
        print(json.dumps(out))
    else:
        print(f"n  = {render(d.n, radix)}")
        for i, p in enumerate(d.parts, 1):
            print(f"p{i} = {render(p, radix)}")
        prov = d.provenance
        print(f"type {prov.tag}, algorithm {prov.algorithm}, adjustment {prov.adjustment}")
        if args.trace:
            for line in _trace_lines(d, radix):
                print(line)
    return 0 if verify(d) else 1


def cmd_verify(args):
    ds = _number(args.n, args)
    texts = [t for t in args.parts.split(",")]
    if len(texts) != 3:
        raise UsageError("--parts needs exactly three comma-separated numbers")
    parts = tuple(_number(t, args, "part") for t in texts)
    d = Decomposition(ds, parts, Provenance("given", "none", "none"))
    ok = verify(d)
    bad = [render(p, _radix(args)) for p in parts if p.digits != p.digits[::-1]]
    if ok:
        print("valid")
        return 0
    if bad:
        print(f"invalid: not palindromes in base {args.base}: {', '.join(bad)}")
    else:
        print(f"invalid: parts sum to {render(DigitString.from_int(sum(int(p) for p in parts), args.base), _radix(args))}")
    return 1


def cmd_check(args):
    if args.base < 5:
        raise UsageError("the constructive decomposition needs base >= 5")
    lo = int(_number(args.start, args, "--from"))
    hi = int(_number(args.stop, args, "--to"))
    if lo > hi:
        raise UsageError("--from must not exceed --to")
    failures, hist = check_range(args.base, lo, hi + 1, workers=args.workers)
    print(f"checked: {hi - max(lo, 1) + 1}")
    print(f"failures: {len(failures)}")
    for n, msg in failures[:10]:
        print(f"  {n}: {msg}", file=sys.stderr)
    print("adjustment histogram:")
    for k, v in hist.items():
        print(f"  {k} {v}")
    return 1 if failures else 0


def cmd_twopal(args):
    limit = int(_number(args.limit, args, "--limit"))
    if limit < 1:
        raise UsageError("--limit must be positive")
    count = count_two_sums(limit, args.base, allow_zero=not args.no_zero)
    print(f"count: {count}")
    print(f"density: {count / limit:.6f}")
    if args.csv:
        write_counts_csv(args.csv, [(limit, args.base, count)])
    return 0


def cmd_family(args):
    if args.len < 4:
        raise UsageError("--len must be at least 4")
    radix = _radix(args)
    status = 0
    for ds in family_members(args.len, args.base):
        line = render(ds, radix)
        if args.verify_two:
            v = int(ds)
            with_zero = brute_two_int(v, args.base, True)
            without = brute_two_int(v, args.base, False)
            if with_zero is None and without is None:
                line += " not a sum of two palindromes"
            else:
                line += f" REPRESENTABLE {with_zero or without}"
                status = 1
        print(line)
    return status


def build_parser():
    p = argparse.ArgumentParser(prog="palsum", description="Sums of three palindromes in base g >= 5.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--base", type=int, required=True, help="the base g")
        sp.add_argument("--radix", type=int, default=None, help="radix of numbers on the command line and in output (10 or g)")

    d = sub.add_parser("decompose", help="write n as three palindromes")
    common(d)
    d.add_argument("--n", required=True)
    d.add_argument("--format", choices=("text", "json"), default="text")
    d.add_argument("--trace", action="store_true", help="show the digit configuration")
    d.set_defaults(func=cmd_decompose)

    v = sub.add_parser("verify", help="check a proposed decomposition")
    common(v)
    v.add_argument("--n", required=True)
    v.add_argument("--parts", required=True, help="P1,P2,P3")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("check", help="decompose and verify every n in a range")
    common(c)
    c.add_argument("--from", dest="start", required=True)
    c.add_argument("--to", dest="stop", required=True)
    c.add_argument("--workers", type=int, default=1)
    c.set_defaults(func=cmd_check)

    t = sub.add_parser("twopal", help="count n <= limit that are sums of two palindromes")
    common(t)
    t.add_argument("--limit", required=True)
    t.add_argument("--no-zero", action="store_true", help="do not allow 0 as a summand")
    t.add_argument("--csv", default=None, help="append the result to this CSV file")
    t.set_defaults(func=cmd_twopal)

    f = sub.add_parser("family", help="list integers (g-1)(g-1)*...*0(g-1) of a given length")
    common(f)
    f.add_argument("--len", type=int, required=True)
    f.add_argument("--verify-two", action="store_true")
    f.set_defaults(func=cmd_family)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.base < 2:
        print("error: --base must be at least 2", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DigitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
