"""Command-line front end.

Decimal arguments are read as exact base-10 rationals: ``--x 0.3`` means
3/10, never the nearest binary float.  This matters because the bounds jump
at integer ``x``.

Exit codes: 0 success, 1 verification failure, 2 malformed input or domain
error, 3 size budget exceeded, 4 inapplicable hypothesis.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from . import bounds
from .exactnum import DomainError, DyadicProb, ResourceError, dyadic_to_decimal, parse_rational
from .families import audit_family, build_family_eq, build_family_geq
from .lipschitz import check_lipschitz_bound, random_odd_lipschitz, read_table, write_table
from .verify import (
    SweepSpec,
    find_max_tail,
    load_spec,
    merge_summaries,
    preset,
    records_jsonl,
    run_sweep,
    summary_csv,
)
from .wsum import ENGINES, WeightVector, distribution, parse_weights, read_weights_file

EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3
EXIT_HYPOTHESIS = 4
DIGITS = 12


class HypothesisError(Exception):
    pass


# ---------------------------------------------------------------------------
# rendering


def fmt_fraction(p: DyadicProb) -> str:
    f = p.to_fraction()
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def fmt_short_decimal(p: DyadicProb) -> str:
    return dyadic_to_decimal(p, max(1, min(p.exponent, DIGITS)))


def fmt_human(p: DyadicProb) -> str:
    return f"{fmt_fraction(p)} ({fmt_short_decimal(p)})"


def fmt_rational(x: Fraction) -> str:
    """Terminating decimals as decimals, everything else as ``p/q``."""
    d = x.denominator
    while d % 2 == 0:
        d //= 2
    while d % 5 == 0:
        d //= 5
    if d != 1:
        return str(x)
    if x.denominator == 1:
        return str(x.numerator)
    digits = 0
    while (x * 10 ** digits).denominator != 1:
        digits += 1
    sign = "-" if x < 0 else ""
    scaled = abs(x.numerator * 10 ** digits // x.denominator)
    whole, frac = divmod(scaled, 10 ** digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def prob_fields(p: DyadicProb) -> dict:
    return {"exact": str(p), "fraction": fmt_fraction(p), "decimal": dyadic_to_decimal(p, DIGITS)}


def emit(fmt: str, human: str, row: dict, out) -> None:
    if fmt == "json":
        out.write(json.dumps(row, sort_keys=True) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(list(row))
        w.writerow([row[k] for k in row])
    else:
        out.write(human + "\n")


def _flat(prefix: str, p: DyadicProb) -> dict:
    f = prob_fields(p)
    return {prefix: f["exact"], f"{prefix}_fraction": f["fraction"], f"{prefix}_decimal": f["decimal"]}


# ---------------------------------------------------------------------------
# argument helpers


def _weights(arg: str, bounded: bool = False) -> WeightVector:
    path = Path(arg)
    if path.is_file():
        return read_weights_file(path, bounded=bounded)
    return parse_weights(arg, bounded=bounded)


def _require_positive(w: WeightVector) -> None:
    if not w.all_positive():
        raise HypothesisError("--strict-positive requires every weight > 0")


# ---------------------------------------------------------------------------
# commands


def cmd_bound(args, out) -> int:
    if args.which_bound == "tail":
        rep = bounds.tail_bound(args.n, parse_rational(args.x))
        row = {"n": args.n, "x": args.x, **_flat("bound", rep.bound),
               "parity_case": rep.parity_case.value, "effective_walk_length": rep.effective_walk_length}
        emit(args.format, f"{fmt_human(rep.bound)} [{rep.describe()}]", row, out)
    elif args.which_bound == "point":
        x = parse_rational(args.x)
        if args.weights is not None:
            w = _weights(args.weights)
            if args.strict_positive:
                _require_positive(w)
        if args.strict_positive:
            p = bounds.point_bound_lem1(args.n, x)
            row = {"n": args.n, "x": args.x, **_flat("bound", p), "theorem": "lem1"}
            emit(args.format, f"{fmt_human(p)} [strictly positive weights]", row, out)
        else:
            rep = bounds.point_bound_thm2(args.n, x)
            row = {"n": args.n, "x": args.x, **_flat("bound", rep.bound),
                   "parity_case": rep.parity_case.value, "effective_walk_length": rep.effective_walk_length}
            emit(args.format, f"{fmt_human(rep.bound)} [{rep.describe()}]", row, out)
    elif args.which_bound == "lo":
        p = bounds.lo_bound(args.n, args.k)
        emit(args.format, fmt_human(p), {"n": args.n, "k": args.k, **_flat("bound", p)}, out)
    else:
        fn = {"katona": bounds.katona_bound, "milner": bounds.milner_bound,
              "kleitman": bounds.kleitman_bound}[args.which]
        c = fn(args.n, args.k)
        p = DyadicProb(c, args.n)
        row = {"n": args.n, "k": args.k, "which": args.which, "count": c, **_flat("probability", p)}
        emit(args.format, f"{c} sets = 2^{args.n} * {fmt_human(p)}", row, out)
    return 0


def cmd_dist(args, out) -> int:
    w = _weights(args.weights)
    law = distribution(w, args.engine)
    if args.format == "json":
        row = {"n": law.n, "support": [[str(v), c] for v, c in law.support]}
        out.write(json.dumps(row, sort_keys=True) + "\n")
        return 0
    if args.format == "csv":
        wr = csv.writer(out, lineterminator="\n")
        wr.writerow(["value", "count", "probability", "probability_decimal"])
        for v, c in law.support:
            p = DyadicProb(c, law.n)
            wr.writerow([str(v), c, str(p), dyadic_to_decimal(p, DIGITS)])
        return 0
    out.write(f"S_{law.n} with weights {w}: {len(law.values)} support points, denominator 2^{law.n}\n")
    for v, c in law.support:
        out.write(f"{fmt_rational(v):>14}  {c:>10}  {fmt_human(DyadicProb(c, law.n))}\n")
    return 0


def cmd_prob(args, out) -> int:
    w = _weights(args.weights)
    if args.strict_positive:
        _require_positive(w)
    if args.kind == "interval":
        if args.k is None:
            raise DomainError("prob interval needs --k")
        law = distribution(w, args.engine)
        x_star, p = law.best_interval(args.k)
        ok = all(abs(a) >= 1 for a in w.weights)
        note = "" if ok else " [hypothesis |a_i| >= 1 not satisfied]"
        row = {"k": args.k, "x_star": str(x_star), **_flat("probability", p), "hypothesis_satisfied": ok}
        emit(args.format, f"{fmt_fraction(p)} at x*={fmt_rational(x_star)}{note}", row, out)
        return 0
    if args.x is None:
        raise DomainError(f"prob {args.kind} needs --x")
    x = parse_rational(args.x)
    from .wsum import point_prob, tail_prob

    p = tail_prob(w, x, args.engine) if args.kind == "tail" else point_prob(w, x, args.engine)
    emit(args.format, fmt_human(p), {"kind": args.kind, "x": args.x, **_flat("probability", p)}, out)
    return 0


def cmd_family(args, out) -> int:
    w = _weights(args.weights, bounded=True)
    x = parse_rational(args.x)
    rep = audit_family(w, x)
    if args.export_geq:
        build_family_geq(w, x).write(args.export_geq)
    if args.export_eq:
        build_family_eq(w, x).write(args.export_eq)
    d = rep.as_dict()
    if args.format == "json":
        out.write(json.dumps(d, sort_keys=True) + "\n")
    elif args.format == "csv":
        wr = csv.writer(out, lineterminator="\n")
        wr.writerow(list(d))
        wr.writerow([json.dumps(v) if isinstance(v, (list, dict)) else v for v in d.values()])
    else:
        for key, value in d.items():
            out.write(f"{key:>20}: {value}\n")
    return 0 if rep.passed else EXIT_FAIL


def cmd_lipschitz(args, out) -> int:
    if args.action == "gen":
        t = random_odd_lipschitz(args.n, args.seed)
        text = write_table(t, args.out)
        if not args.out:
            out.write(text)
        return 0
    t = read_table(args.table)
    chk = check_lipschitz_bound(t, parse_rational(args.x))
    status = "ok" if chk.passed else "VIOLATION"
    tight = " (tight)" if chk.tight else ""
    row = {"n": chk.n, "x": args.x, **_flat("lhs", chk.lhs), **_flat("rhs", chk.rhs),
           "slack": str(chk.slack), "passed": chk.passed, "tight": chk.tight}
    emit(args.format, f"{status}: {fmt_human(chk.lhs)} <= {fmt_human(chk.rhs)}{tight}", row, out)
    return 0 if chk.passed else EXIT_FAIL


def cmd_verify(args, out) -> int:
    if args.spec:
        specs: Sequence[SweepSpec] = [load_spec(Path(args.spec).read_text())]
    else:
        specs = preset(args.preset)
    summaries, notices, failures = [], [], []
    jsonl = open(args.out, "w") if args.out else None
    try:
        for spec in specs:
            res = run_sweep(spec, keep_records=jsonl is not None, workers=args.workers)
            if jsonl is not None:
                jsonl.writelines(records_jsonl(res.records))
            summaries.append(res.summary)
            notices.extend(f"[{spec.name}] {m}" for m in res.notices)
            failures.extend(res.failures)
    finally:
        if jsonl is not None:
            jsonl.close()
    merged = merge_summaries(summaries)
    table = summary_csv(merged)
    if args.summary:
        Path(args.summary).write_text(table)
    out.write(table)
    for m in notices:
        out.write(f"notice: {m}\n")
    total_failed = sum(s["failed"] for s in merged.values())
    out.write(f"failures: {total_failed}\n")
    for cmd in failures[:20]:
        out.write(f"reproduce: {cmd}\n")
    return EXIT_FAIL if total_failed else 0


def _default_search(n: int):
    # multisets of a 5-value grid
    return Fraction(1, 4) if math.comb(n + 4, 4) <= 5000 else 200


def cmd_curve(args, out) -> int:
    lo, hi, step = (parse_rational(v) for v in (args.x_min, args.x_max, args.step))
    if step <= 0:
        raise DomainError("--step must be positive")
    if args.search:
        kind, _, val = args.search.partition(":")
        budget = parse_rational(val) if kind == "grid" else int(val)
    else:
        budget = _default_search(args.n)
    wr = csv.writer(out, lineterminator="\n")
    wr.writerow(["x", "exact_max_found", "thm1_bound", "hoeffding", "kwapien",
                 "exact_max_found_exact", "thm1_bound_exact", "kwapien_exact"])
    x = lo
    while x <= hi:
        if x > 0:
            _, found = find_max_tail(args.n, x, budget)
            tb = bounds.tail_bound(args.n, x).bound
            kw = bounds.kwapien_rhs(args.n, x)
            hf = bounds.hoeffding_bound(args.n, x)
            wr.writerow([fmt_rational(x), dyadic_to_decimal(found, DIGITS), dyadic_to_decimal(tb, DIGITS),
                         f"{hf:.12f}", dyadic_to_decimal(kw, DIGITS), str(found), str(tb), str(kw)])
        x += step
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="symwalk", description=__doc__.splitlines()[0])
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("human", "csv", "json"), default="human")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", help="closed-form bounds")
    bsub = b.add_subparsers(dest="which_bound", required=True)
    t = bsub.add_parser("tail", parents=[fmt], help="sup P{S_n >= x}")
    t.add_argument("--n", type=int, required=True)
    t.add_argument("--x", required=True)
    pt = bsub.add_parser("point", parents=[fmt], help="sup P{S_n = x}")
    pt.add_argument("--n", type=int, required=True)
    pt.add_argument("--x", required=True)
    pt.add_argument("--strict-positive", action="store_true", help="bound for strictly positive weights")
    pt.add_argument("--weights", help="optional weights to check against --strict-positive")
    lo = bsub.add_parser("lo", parents=[fmt], help="Littlewood-Offord interval bound")
    lo.add_argument("--n", type=int, required=True)
    lo.add_argument("--k", type=int, required=True)
    fa = bsub.add_parser("family", parents=[fmt], help="family cardinality bounds")
    fa.add_argument("--n", type=int, required=True)
    fa.add_argument("--k", type=int, required=True)
    fa.add_argument("--which", choices=("katona", "milner", "kleitman"), required=True)

    d = sub.add_parser("dist", parents=[fmt], help="exact law of S_n")
    d.add_argument("--weights", required=True, help="file (one rational per line) or list like 1,1,0.5")
    d.add_argument("--engine", choices=ENGINES, default="auto")

    pr = sub.add_parser("prob", parents=[fmt], help="exact probabilities for given weights")
    pr.add_argument("kind", choices=("tail", "point", "interval"))
    pr.add_argument("--weights", required=True)
    pr.add_argument("--x")
    pr.add_argument("--k", type=int)
    pr.add_argument("--engine", choices=ENGINES, default="auto")
    pr.add_argument("--strict-positive", action="store_true")

    fam = sub.add_parser("family", help="set-family audits")
    fsub = fam.add_subparsers(dest="action", required=True)
    au = fsub.add_parser("audit", parents=[fmt])
    au.add_argument("--weights", required=True)
    au.add_argument("--x", required=True)
    au.add_argument("--export-geq", help="write F_{>=x} as bitstrings")
    au.add_argument("--export-eq", help="write F_x as bitstrings")

    lp = sub.add_parser("lipschitz", help="odd 1-Lipschitz tables")
    lsub = lp.add_subparsers(dest="action", required=True)
    g = lsub.add_parser("gen")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--out")
    c = lsub.add_parser("check", parents=[fmt])
    c.add_argument("--table", required=True)
    c.add_argument("--x", required=True)

    v = sub.add_parser("verify", help="run verification sweeps")
    src = v.add_mutually_exclusive_group(required=True)
    src.add_argument("--preset", choices=("quick", "full"))
    src.add_argument("--spec", help="key = value sweep file")
    v.add_argument("--out", help="write one JSON record per line")
    v.add_argument("--summary", help="write the CSV summary here too")
    v.add_argument("--workers", type=int, help="worker processes (default: $SYMWALK_WORKERS or 1)")

    cu = sub.add_parser("curve", help="CSV comparing found maxima with the bounds")
    cu.add_argument("--n", type=int, required=True)
    cu.add_argument("--x-min", required=True)
    cu.add_argument("--x-max", required=True)
    cu.add_argument("--step", required=True)
    cu.add_argument("--search", help="grid:STEP or random:COUNT (default picks by n)")
    return p


COMMANDS = {
    "bound": cmd_bound,
    "dist": cmd_dist,
    "prob": cmd_prob,
    "family": cmd_family,
    "lipschitz": cmd_lipschitz,
    "verify": cmd_verify,
    "curve": cmd_curve,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except HypothesisError as exc:
        print(f"symwalk: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except ResourceError as exc:
        print(f"symwalk: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DomainError, ValueError, OSError) as exc:
        print(f"symwalk: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run(argv: Optional[Sequence[str]] = None) -> str:
    """Run a command and return what it printed; handy in notebooks and tests."""
    buf = io.StringIO()
    main(argv, buf)
    return buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
