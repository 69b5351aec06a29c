"""Command line surface: dimensions, basis enumeration, generator matrix
construction, verification suites, branching tables.

Exit codes: 0 success, 1 failed verification, 2 invalid weight or
configuration, 3 construction failure.
"""

import argparse
import csv
import io
import json
import os
import re
import sys
from fractions import Fraction

from .exact import format_rational, parse_rational
from .patterns import (DimensionCapError, check_weight_gl, check_weight_so,
                       enumerate_patterns_a, enumerate_patterns_b)
from .glrep import build_gl
from .sorep import ConstructionError, build_so
from .checks import (branching_multiplicity, freudenthal_multiplicities,
                     run_verification, weyl_dim)

DEFAULT_CAP = 5000


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code
        self.message = message


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", required=True, choices=["A", "B"],
                        dest="algebra")
    common.add_argument("--rank", required=True, type=int)
    common.add_argument("--weight", required=True,
                        help="comma-separated exact rationals, halves as p/2")
    common.add_argument("--format", default="json", choices=["json", "csv"])
    common.add_argument("--out", help="output path (default: stdout)")
    common.add_argument("--level", default="fast", choices=["fast", "full"])
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="largest dimension the command will allocate")
    common.add_argument("--deform-trace", action="store_true",
                        help="dump pre-specialization rational functions "
                             "to stderr")
    p = argparse.ArgumentParser(
        prog="gtrep",
        description="exact generator matrices over pattern bases")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("dim", parents=[common],
                   help="print the Weyl dimension")
    sub.add_parser("patterns", parents=[common],
                   help="enumerate the pattern basis")
    sub.add_parser("build", parents=[common],
                   help="construct all generator matrices")
    sub.add_parser("verify", parents=[common],
                   help="run the verification suite")
    sub.add_parser("branch", parents=[common],
                   help="branching table to the rank n-1 subalgebra")
    return p


def _weight_of(args):
    if args.rank < 1:
        raise CliError(2, "rank must be at least 1")
    toks = [t.strip() for t in args.weight.split(",")]
    if len(toks) != args.rank:
        raise CliError(2, "expected %d weight entries, got %d"
                       % (args.rank, len(toks)))
    try:
        vals = tuple(parse_rational(t) for t in toks)
    except ValueError as e:
        raise CliError(2, str(e))
    try:
        if args.algebra == "A":
            return check_weight_gl(vals)
        return check_weight_so(vals)
    except ValueError as e:
        raise CliError(2, str(e))


def _cap_guard(args, lam):
    dim = weyl_dim(args.algebra, lam)
    if dim > args.cap:
        raise CliError(2, "dimension %d exceeds cap %d" % (dim, args.cap))
    return dim


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
        return
    tmp = out + ".tmp"
    with open(tmp, "w") as f:
        f.write(text)
    os.replace(tmp, out)


def _json_only(args):
    if args.format != "json":
        raise CliError(2, "csv format only applies to build output")


def _weight_strs(lam):
    return [format_rational(x if isinstance(x, Fraction) else x.as_fraction())
            for x in lam]


def _build_rep(args, lam):
    trace = [] if args.deform_trace else None
    if args.algebra == "A":
        rep = build_gl(lam, cap=args.cap)
    else:
        rep = build_so(lam, cap=args.cap, trace=trace)
    if trace:
        for k, src, tgt, val in trace:
            sys.stderr.write("deform: level=%d source=%d target=%d value=%s\n"
                             % (k, src, tgt, val))
    return rep


def _gen_keys(args, n):
    if args.algebra == "A":
        return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    return [(i, j) for i in range(-n, n + 1) for j in range(-n, n + 1)]


def _rep_json(args, lam, rep):
    letter = "E" if args.algebra == "A" else "F"
    ops = {}
    for i, j in _gen_keys(args, rep.n):
        op = rep.gens[(i, j)]
        ops["%s(%d,%d)" % (letter, i, j)] = {
            "dim": rep.dim,
            "entries": [[r, c, format_rational(v)]
                        for (r, c), v in op.entries_sorted()]}
    return {"algebra": {"type": args.algebra, "rank": args.rank},
            "highest_weight": _weight_strs(lam),
            "dimension": rep.dim,
            "basis": [p.to_json() for p in rep.patterns],
            "operators": ops}


def _rep_csv(args, rep):
    letter = "E" if args.algebra == "A" else "F"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["generator", "row", "col", "value"])
    for i, j in _gen_keys(args, rep.n):
        name = "%s(%d,%d)" % (letter, i, j)
        for (r, c), v in rep.gens[(i, j)].entries_sorted():
            w.writerow([name, r, c, format_rational(v)])
    return buf.getvalue()


def cmd_dim(args):
    lam = _weight_of(args)
    _emit("%d\n" % weyl_dim(args.algebra, lam), args.out)
    return 0


def cmd_patterns(args):
    _json_only(args)
    lam = _weight_of(args)
    _cap_guard(args, lam)
    if args.algebra == "A":
        pats = enumerate_patterns_a(lam, args.cap)
    else:
        pats = enumerate_patterns_b(lam, args.cap)
    doc = {"algebra": {"type": args.algebra, "rank": args.rank},
           "highest_weight": _weight_strs(lam),
           "dimension": len(pats),
           "basis": [p.to_json() for p in pats]}
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return 0


def cmd_build(args):
    lam = _weight_of(args)
    _cap_guard(args, lam)
    rep = _build_rep(args, lam)
    if args.format == "csv":
        _emit(_rep_csv(args, rep), args.out)
    else:
        _emit(json.dumps(_rep_json(args, lam, rep), indent=2) + "\n", args.out)
    return 0


def _apply_corrupt_hook(rep, algebra):
    raw = os.environ.get("GTREP_CORRUPT")
    if not raw:
        return
    try:
        name, r, c, val = raw.rsplit(":", 3)
        m = re.match(r"^([EF])\((-?\d+),(-?\d+)\)$", name)
        key = (int(m.group(2)), int(m.group(3)))
        pos = (int(r), int(c))
        v = parse_rational(val)
        op = rep.gens[key]
    except (AttributeError, KeyError, ValueError):
        raise CliError(2, "malformed GTREP_CORRUPT value %r" % raw)
    if v:
        op.ent[pos] = v
    else:
        op.ent.pop(pos, None)


def cmd_verify(args):
    _json_only(args)
    lam = _weight_of(args)
    _cap_guard(args, lam)
    rep = _build_rep(args, lam)
    _apply_corrupt_hook(rep, args.algebra)
    report = run_verification(rep, args.algebra, args.level)
    _emit(json.dumps(report.to_json(), indent=2) + "\n", args.out)
    return 0 if report.passed else 1


def _branch_candidates(lam):
    # non-increasing tuples in the parity class of lam that can interleave
    n = len(lam)
    lo, hi = lam[-1].as_fraction(), -lam[0].as_fraction()
    step = Fraction(1)
    out = []

    def rec(prefix):
        if len(prefix) == n - 1:
            out.append(tuple(prefix))
            return
        v = min(prefix[-1], Fraction(0)) if prefix else min(hi, Fraction(0))
        while v >= lo:
            rec(prefix + [v])
            v -= step

    rec([])
    return out


def cmd_branch(args):
    _json_only(args)
    lam = _weight_of(args)
    lines = []
    code = 0
    if args.algebra == "A":
        # multiplicity-free: list the interleaving weights
        fr = [Fraction(x) for x in lam]
        ranges = []
        for i in range(len(fr) - 1):
            ranges.append([fr[i + 1] + k
                           for k in range(int(fr[i] - fr[i + 1]) + 1)])
        mus = [[]]
        for r in ranges:
            mus = [m + [v] for m in mus for v in r]
        for mu in sorted(map(tuple, mus)):
            lines.append("mu=(%s)" % ",".join(format_rational(x) for x in mu))
    elif args.rank == 1:
        lines.append("rank 1 restricts to the trivial subalgebra; "
                     "weight multiplicities:")
        freud = freudenthal_multiplicities(args.algebra, lam, cap=args.cap)
        for w, m in sorted(freud.items()):
            lines.append("weight=(%s): %d"
                         % (",".join(format_rational(x) for x in w), m))
    else:
        _cap_guard(args, lam)
        table = []
        for mu in _branch_candidates(lam):
            c = branching_multiplicity(lam, mu)
            if c:
                table.append((mu, c))
        table.sort(key=lambda t: t[0], reverse=True)
        parts = []
        total = 0
        for mu, c in table:
            d = weyl_dim("B", mu)
            parts.append("%d*%d" % (c, d))
            total += c * d
            lines.append("mu=(%s): %d"
                         % (",".join(format_rational(x) for x in mu), c))
        want = weyl_dim("B", lam)
        ok = total == want
        lines.append("%s=%d %s" % ("+".join(parts), total,
                                   "ok" if ok else "MISMATCH"))
        if not ok:
            code = 1
    _emit("".join(l + "\n" for l in lines), args.out)
    return code


def _merge_weight(argv):
    # join "--weight -1/2" into one token; bare rationals starting with a
    # dash would otherwise parse as option names
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--weight" and i + 1 < len(argv):
            out.append("--weight=" + argv[i + 1])
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None):
    if argv is None:
        argv = sys.argv[1:]
    args = build_parser().parse_args(_merge_weight(list(argv)))
    handlers = {"dim": cmd_dim, "patterns": cmd_patterns, "build": cmd_build,
                "verify": cmd_verify, "branch": cmd_branch}
    try:
        return handlers[args.command](args)
    except CliError as e:
        sys.stderr.write(e.message + "\n")
        return e.code
    except DimensionCapError as e:
        sys.stderr.write(str(e) + "\n")
        return 2
    except ConstructionError as e:
        msg = str(e)
        if e.witness is not None:
            msg += " [witness: %s]" % (e.witness,)
        sys.stderr.write("construction failed: %s\n" % msg)
        return 3


if __name__ == "__main__":
    sys.exit(main())
