"""Command-line front end.

Exit codes: 0 all checks passed, 1 counterexamples found, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import dyckcore, harness, oracles
from ._accel import IMPLEMENTATION
from .encoder import cut_sequence, divisors, encode
from .errors import DyckDivError
from .exactnum import Rational, parse_lambda

STATS_KEYS = (
    "n",
    "lambda",
    "word",
    "height",
    "omega",
    "ct",
    "ell_aa",
    "ell_ab",
    "ell_ba",
    "ell_bb",
    "middle",
    "blocks",
    "densely_divisible",
    "even_trapezoidal",
    "pythagorean_semiperimeter",
    "power_of_two",
)

THEOREMS = ("hoft", "pow2-trapezoid", "pow2-dense", "lemmas", "characterizations", "languages")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _lambda_arg(text: str) -> Rational:
    try:
        return parse_lambda(text)
    except DyckDivError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def stats_row(n: int, lam: Rational) -> dict:
    w = encode(n, lam)
    divs = divisors(n)
    aa, ab, ba, bb = (dyckcore.ell_counts(w)[x] for x in dyckcore.PairLetter)
    blocks = oracles.blocks_count(n, lam, divs)
    values = (
        n,
        str(lam),
        w,
        dyckcore.height(w),
        dyckcore.omega(w),
        dyckcore.ct_pairs(w),
        aa,
        ab,
        ba,
        bb,
        oracles.middle_count(n, lam, divs),
        blocks,
        blocks == 1,
        oracles.is_even_trapezoidal(n),
        oracles.is_pythagorean_semiperimeter(n),
        oracles.is_power_of_two(n, divs),
    )
    return dict(zip(STATS_KEYS, values))


def cmd_encode(args, out) -> int:
    cs = cut_sequence(args.n, args.lam)
    w = encode(args.n, args.lam)
    assert cs.word == w
    if args.format == "json":
        out.write(dumps({"n": args.n, "lambda": str(args.lam), "word": w, "cut_sequence": cs.to_json()}))
    elif args.format == "csv":
        rows = [(args.n, str(args.lam), str(e.value), e.tag.value, e.divisor) for e in cs.entries]
        out.write(_csv_text(("n", "lambda", "value", "tag", "divisor"), rows))
    else:
        out.write(w + "\n")
        for e in cs.entries:
            out.write(f"  {e.tag.value}  {e.value}  (divisor {e.divisor})\n")
    return 0


def cmd_stats(args, out) -> int:
    ns = [args.n] if args.n is not None else range(1, args.nmax + 1)
    rows = [stats_row(n, args.lam) for n in ns]
    if args.format == "json":
        out.write(dumps(rows[0] if args.n is not None else rows))
    elif args.format == "csv":
        out.write(_csv_text(STATS_KEYS, ([_csv_value(r[k]) for k in STATS_KEYS] for r in rows)))
    else:
        for i, row in enumerate(rows):
            if i:
                out.write("\n")
            for k in STATS_KEYS:
                out.write(f"{k}: {row[k]}\n")
    return 0


def _csv_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


def _progress(done: int, total: int) -> None:
    print(f"  {done}/{total}", file=sys.stderr, flush=True)


def cmd_verify(args, out) -> int:
    kw = {"jobs": args.jobs, "max_counterexamples": args.max_counterexamples}
    if not args.quiet:
        kw["progress"] = _progress
    lam, nmax = args.lam, args.nmax
    single = True
    if args.theorem == "hoft":
        reports = [harness.verify_hoft(lam, 1, nmax, **kw)]
    elif args.theorem == "pow2-trapezoid":
        reports = [harness.verify_pow2_trapezoid(1, nmax, **kw)]
    elif args.theorem == "pow2-dense":
        reports = [harness.verify_pow2_dense(1, nmax, **kw)]
    elif args.theorem == "lemmas":
        reports = [harness.check_lemma_suite(lam, 1, nmax, **kw)]
    elif args.theorem == "characterizations":
        reports = harness.run_characterizations(lam, nmax, **kw)
        single = False
    else:
        reports = harness.run_language_checks(args.max_len, max_counterexamples=args.max_counterexamples)
        single = False

    if args.format == "json":
        payload = [r.to_json(timing=args.timing) for r in reports]
        out.write(dumps(payload[0] if single else payload))
    elif args.format == "csv":
        header = ["theorem", "lambda", "lo", "hi", "checked", "status", "expected", "failures"]
        if args.timing:
            header.append("elapsed_ms")
        rows = []
        for r in reports:
            j = r.to_json(timing=args.timing)
            row = [j["theorem"], j["lambda"] or "", *j["range"], j["checked"], j["status"], j["expected"], j["failures"]]
            if args.timing:
                row.append(j["elapsed_ms"])
            rows.append(row)
        out.write(_csv_text(header, rows))
    else:
        for r in reports:
            out.write(r.summary() + "\n")
            if args.timing:
                out.write(f"  elapsed {r.elapsed * 1000.0:.1f} ms\n")
    return 0 if all(r.as_expected for r in reports) else 1


def cmd_sequence(args, out) -> int:
    pred = harness.Predicate.parse(args.pred)
    flags = oracles.pythagorean_semiperimeter_flags(args.nmax) if pred is harness.Predicate.NOT_PYTH else None
    seq = [n for n in range(1, args.nmax + 1) if harness.predicate_holds(pred, n, args.lam, None, flags)]
    if args.format == "json":
        out.write(dumps(seq))
    elif args.format == "csv":
        out.write(",".join(map(str, seq)) + "\n")
    else:
        out.writelines(f"{n}\n" for n in seq)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dyckdiv",
        description="Encode integers as symmetric Dyck words and verify divisor theorems exhaustively.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({IMPLEMENTATION} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, lam=True):
        if lam:
            p.add_argument("--lambda", dest="lam", type=_lambda_arg, default=parse_lambda("2"),
                           help="scale factor P/Q or P, must exceed 1 (default 2)")
        p.add_argument("--format", choices=("human", "json", "csv"), default="human")

    p = sub.add_parser("encode", help="print the word of n and its cut sequence")
    p.add_argument("--n", type=_positive_int, required=True)
    common(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("stats", help="word statistics and arithmetic profile")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=_positive_int)
    g.add_argument("--nmax", type=_positive_int, help="one row per n in 1..NMAX")
    common(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("verify", help="run a theorem or lemma sweep over 1..NMAX")
    p.add_argument("--theorem", choices=THEOREMS, required=True)
    p.add_argument("--nmax", type=_positive_int, default=10_000)
    p.add_argument("--jobs", type=_positive_int, default=1)
    p.add_argument("--max-counterexamples", type=_positive_int, default=harness.DEFAULT_MAX_COUNTEREXAMPLES)
    p.add_argument("--max-len", type=int, default=20, help="word length bound for --theorem languages")
    p.add_argument("--timing", action="store_true", help="include elapsed_ms (makes output run-dependent)")
    p.add_argument("--quiet", action="store_true", help="no progress on stderr")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sequence", help="list n <= NMAX satisfying a predicate")
    p.add_argument("--pred", required=True, choices=[x.value for x in harness.Predicate])
    p.add_argument("--nmax", type=_positive_int, required=True)
    common(p)
    p.set_defaults(func=cmd_sequence)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except DyckDivError as exc:
        print(f"dyckdiv: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
