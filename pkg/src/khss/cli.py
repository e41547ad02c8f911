"""Command line front end.

    khss ss 3_1 -t z -c 2 -r           # prints -2
    khss ckh "[[1,4,2,5],...]" -t z-poly -c H -r -a
    khss batch knots.txt -t z -c 2 -t z -c 3 -r -o out.csv

Exit status: 0 on success, 1 for bad input (unknown knot, malformed PD,
unsupported ring), 2 for internal failures.  Set ``KHSS_DEBUG=1`` to turn on
invariant checks (d^2 = 0, cycle conditions) during the computation.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
import time

from .diagram import mirror, resolve_target, seifert_data
from .errors import (
    KhssError,
    MalformedPD,
    MarkRequiredForReduced,
    MissingMarkedEdge,
    MixedRings,
    NotEuclidean,
    TooLargeForCube,
    UnknownKnot,
    UnknownRing,
    InvalidPrime,
    UnsupportedCForRing,
)
from .homology import class_divisibility, homology, homology_at
from .invariants import reduced_s, unreduced_s
from .rings import ring_from_cli
from .simplify import simplify_diagram

USER_ERRORS = (
    UnknownRing, InvalidPrime, UnsupportedCForRing, MixedRings, MalformedPD,
    MissingMarkedEdge, MarkRequiredForReduced, UnknownKnot, TooLargeForCube,
    NotEuclidean,
)

CSV_HEADER = ["name", "ring", "c", "reduced", "d_c", "writhe", "seifert_circles", "s", "ms", "error"]


def _ring_args(p, multi=False):
    action = "append" if multi else "store"
    p.add_argument("-t", "--type", dest="type", action=action, default=None,
                   help="ring: z, q-poly, f<p>-poly, gauss, eisen, z-poly (default z)")
    p.add_argument("-c", dest="c", action=action, default=None,
                   help="distinguished prime: an integer, H, 1+i or 1+w (default 2 / H / 1+i / 1+w)")
    p.add_argument("-r", "--reduced", action="store_true", help="use the reduced theory")


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with status 1, like other bad input."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="khss", description="Khovanov homology and Lee-class invariants")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ss", help="print the invariant s of a knot")
    p.add_argument("target", help="knot name (3_1 ... 8_21) or PD code")
    _ring_args(p)
    p.add_argument("-m", "--mirror", action="store_true", help="use the mirror image")
    p.add_argument("--mark", type=int, default=None, help="marked edge for the reduced theory")

    p = sub.add_parser("ckh", help="print the simplified complex and the Lee cycle")
    p.add_argument("target")
    _ring_args(p)
    p.add_argument("-m", "--mirror", action="store_true")
    p.add_argument("--mark", type=int, default=None)
    p.add_argument("-a", "--all", action="store_true", help="dump gradings and differential matrices")

    p = sub.add_parser("batch", help="compute invariants for a file of `name,pd` lines into CSV")
    p.add_argument("file", help="input file, or - for stdin")
    _ring_args(p, multi=True)
    p.add_argument("-o", "--output", default=None, help="CSV output path (default stdout)")
    return ap


def _ring(tflag, cflag):
    return ring_from_cli(tflag or "z", cflag)


def _diagram(args):
    D = resolve_target(args.target)
    if args.mirror:
        D = mirror(D)
    if args.mark is not None:
        D = D.with_mark(args.mark)
    return D


def cmd_ss(args, out) -> int:
    R = _ring(args.type, args.c)
    D = _diagram(args)
    rep = reduced_s(D, R) if args.reduced else unreduced_s(D, R)
    print(rep.s, file=out)
    return 0


def cmd_ckh(args, out) -> int:
    R = _ring(args.type, args.c)
    D = _diagram(args)
    if args.reduced and D.marked_edge is None:
        D = D.with_mark(D.edges[0])
    C, z = simplify_diagram(D, R, reduced=args.reduced)
    fmt = R.fmt
    kind = "reduced" if args.reduced else "unreduced"
    print(f"# {D.name or D.pd()}  {R.name}, c = {fmt(R.c)}, {kind}", file=out)
    r, w, _ = seifert_data(D)
    print(f"# w = {w}, r = {r}, crossings = {D.n_crossings}", file=out)
    print(C.summary(), file=out)
    if args.all:
        print(C.dump(), file=out)
    vec = z.dense(C.rank(0), R.zero)
    print("lee = (" + ", ".join(fmt(v) for v in vec) + ")", file=out)
    if R.snf_capable:
        for k, (free, tors) in homology(C).items():
            if free or tors:
                tt = " + ".join(f"{R.name}/({fmt(t)})" for t in tors)
                parts = [f"{R.name}^{free}"] if free else []
                if tt:
                    parts.append(tt)
                print(f"H^{k} = " + " + ".join(parts), file=out)
        P = homology_at(C, 0, {"lee": z})
        d = class_divisibility(P, "lee")
        coords = ", ".join(fmt(v) for v in P.class_coords["lee"])
        print(f"lee in H^0/Tor = ({coords}), d = {d}", file=out)
    return 0


def _read_batch(path):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, _, pd = line.partition(",")
        rows.append((name.strip(), pd.strip() or name.strip()))
    return rows


def cmd_batch(args, out) -> int:
    types = args.type or ["z"]
    cs = args.c or [None] * len(types)
    if len(cs) != len(types):
        raise UnsupportedCForRing("give one -c per -t in batch mode")
    rings = [_ring(t, c) for t, c in zip(types, cs)]
    rows = _read_batch(args.file)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    failed = 0
    for name, target in rows:
        for R in rings:
            t0 = time.perf_counter()
            try:
                D = resolve_target(target).with_name(name)
                rep = reduced_s(D, R) if args.reduced else unreduced_s(D, R)
                ms = round((time.perf_counter() - t0) * 1000)
                w.writerow([name, R.flag, R.fmt(R.c), str(args.reduced).lower(),
                            rep.d_c, rep.w, rep.r, rep.s, ms, ""])
            except Exception as e:  # recorded per row
                failed += 1
                ms = round((time.perf_counter() - t0) * 1000)
                msg = f"{type(e).__name__}: {e}".replace("\n", " ")
                w.writerow([name, R.flag, R.fmt(R.c), str(args.reduced).lower(),
                            "", "", "", "", ms, msg])
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as f:
            f.write(buf.getvalue())
    else:
        out.write(buf.getvalue())
    return 1 if failed else 0


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        if args.command == "ss":
            return cmd_ss(args, out)
        if args.command == "ckh":
            return cmd_ckh(args, out)
        return cmd_batch(args, out)
    except USER_ERRORS as e:
        print(f"error: {e.args[0] if e.args else e}", file=sys.stderr)
        return 1
    except (KhssError, AssertionError) as e:
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
