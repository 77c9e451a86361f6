"""Command-line front end.

Exit codes: 0 success, 1 verification failure (or a failed internal
cross-check), 2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .cyclic import EmptyStratumError, IndexSet, phi, phi_paper_variant
from .pcone import (
    PhaMismatchError,
    StratumContext,
    cone_crs,
    cone_dominant,
    cone_gs,
    cone_lw,
    cone_pha,
    cone_pha_adjugate,
)
from .polycone import ConeError, PolyCone
from .ppoly import P
from .serialize import cone_to_json, dumps, pcone_to_json
from .verify import MAX_N_CEILING, SUITES, default_jobs, intersection_sum_cone, run_suite

CONE_KINDS = ("pha", "crs", "isum", "lw", "gs", "dominant")


class UsageError(Exception):
    pass


def parse_set(text: str, n: int) -> IndexSet:
    """``""`` is the empty set, otherwise a comma list of indices in 1..n."""
    text = text.strip()
    if not text:
        return IndexSet(n)
    try:
        members = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError(f"malformed index set {text!r}") from None
    bad = [m for m in members if not 1 <= m <= n]
    if bad:
        raise UsageError(f"indices {bad} outside 1..{n}")
    return IndexSet.of(n, members)


def parse_p(text: str):
    if text == "symbolic":
        return P
    try:
        p = int(text)
    except ValueError:
        raise UsageError(f"p must be an integer >= 2 or 'symbolic', got {text!r}") from None
    if p < 2:
        raise UsageError(f"p must be at least 2, got {p}")
    return p


def parse_primes(text: str) -> tuple[int, ...]:
    try:
        primes = tuple(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise UsageError(f"malformed prime list {text!r}") from None
    if not primes or any(p < 2 for p in primes):
        raise UsageError("primes must be integers >= 2")
    return primes


def parse_weight(text: str, n: int) -> tuple[int, ...]:
    try:
        x = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise UsageError(f"malformed weight {text!r}") from None
    if len(x) != n:
        raise UsageError(f"weight has length {len(x)}, expected {n}")
    return x


def _fmt_set(s: IndexSet) -> str:
    return ",".join(str(m) for m in s)


def form_text(f: Sequence[int]) -> str:
    terms = []
    for j, c in enumerate(f, start=1):
        if c:
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append(("-" if c < 0 else "+", f"{mag}x{j}"))
    if not terms:
        return "0 <= 0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out + " <= 0"


def _cone_text(cone: PolyCone) -> str:
    canon = cone.canonical()
    return "\n".join(form_text(f) for f in canon.hrep) if canon.hrep else "(no inequalities: full space)"


# -- commands ----------------------------------------------------------------------------

def _add_ctx(sp: argparse.ArgumentParser, need_s: bool = True, need_p: bool = True) -> None:
    sp.add_argument("--n", type=int, required=True, help="rank n (indices 1..n)")
    sp.add_argument("--r", default="", help="parabolic type R as a comma list ('' for empty)")
    if need_s:
        sp.add_argument("--s", default="", help="stratum S as a comma list")
    if need_p:
        sp.add_argument("--p", default="2", help="prime p (integer >= 2) or 'symbolic'")


def _ctx(args) -> StratumContext:
    if args.n < 1:
        raise UsageError("n must be positive")
    R = parse_set(args.r, args.n)
    S = parse_set(getattr(args, "s", ""), args.n)
    p = parse_p(getattr(args, "p", "2"))
    return StratumContext(args.n, R, S, p)


def cmd_phi(args, out) -> int:
    ctx = _ctx(args)
    if not ctx.S:
        raise UsageError("empty stratum")
    T = phi(ctx.n, ctx.R, ctx.S)
    if not args.paper_variant:
        print(_fmt_set(T), file=out)
        return 0
    if ctx.R:
        raise UsageError("the closed-form variant applies to R = ∅ only")
    V = phi_paper_variant(ctx.n, ctx.S)
    flag = "agree" if V == T else "DISCREPANT"
    print(f"phi\tpaper-variant\tstatus", file=out)
    print(f"{_fmt_set(T) or '-'}\t{_fmt_set(V) or '-'}\t{flag}", file=out)
    return 0


def _build_cone(kind: str, ctx: StratumContext):
    """Returns a PCone (pha, crs) or a PolyCone (the rest)."""
    if kind in ("pha", "crs", "isum") and not ctx.S:
        raise UsageError("empty stratum")
    symbolic = ctx.p is P
    if kind == "pha":
        if not symbolic:
            cone_pha(ctx)  # raises on cross-check failure
        return cone_pha_adjugate(ctx)
    if kind == "crs":
        return cone_crs(ctx)
    if kind == "gs":
        return cone_gs(ctx.n, ctx.R)
    if kind == "dominant":
        return cone_dominant(ctx.n, ctx.R)
    if symbolic:
        raise UsageError(f"cone {kind} needs a concrete p")
    if kind == "isum":
        return intersection_sum_cone(ctx)
    if kind == "lw":
        return cone_lw(ctx.n, ctx.R, ctx.p)
    raise UsageError(f"unknown cone kind {kind!r}")


def cmd_cone(args, out) -> int:
    ctx = _ctx(args)
    cone = _build_cone(args.kind, ctx)
    is_pcone = not isinstance(cone, PolyCone)
    if args.format == "text":
        print(cone.text() if is_pcone else _cone_text(cone), file=out)
        return 0
    if ctx.p is P and is_pcone:
        raise UsageError("symbolic p supports --format text only")
    out.write(dumps(pcone_to_json(cone) if is_pcone else cone_to_json(cone)))
    return 0


def cmd_member(args, out) -> int:
    ctx = _ctx(args)
    if ctx.p is P:
        raise UsageError("membership needs a concrete p")
    x = parse_weight(args.weight, ctx.n)
    cone = _build_cone(args.kind, ctx)
    poly = cone if isinstance(cone, PolyCone) else cone.realized
    f = poly.violated(x)
    if f is None:
        print("true", file=out)
    else:
        value = sum(a * b for a, b in zip(f, x))
        print("false", file=out)
        print(f"violated: {form_text(f)}  (value {value})", file=out)
    return 0


def cmd_verify(args, out) -> int:
    if not 1 <= args.max_n <= MAX_N_CEILING:
        raise UsageError(f"--max-n must be in 1..{MAX_N_CEILING}")
    primes = parse_primes(args.primes)
    jobs = args.jobs if args.jobs is not None else default_jobs()
    if jobs < 1:
        raise UsageError("--jobs must be positive")
    report = run_suite(args.suite, args.max_n, primes, jobs)
    text = dumps(report.to_json())
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    s = report.summary
    status = "PASS" if report.ok else "FAIL"
    print(f"{status} {report.suite}: {len(report.cases)} cases, {s['pass']} pass, "
          f"{s['fail']} fail, {s['skipped']} skipped, {len(report.discrepancies)} discrepancies "
          f"({report.wall_time:.1f}s)", file=sys.stderr)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="strata-cones", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("phi", help="sign set Φ_R(S)")
    _add_ctx(sp, need_p=False)
    sp.add_argument("--paper-variant", action="store_true",
                    help="also print the odd-offset closed formula (R = ∅)")
    sp.set_defaults(func=cmd_phi)

    sp = sub.add_parser("cone", help="construct and print a cone")
    sp.add_argument("kind", choices=CONE_KINDS)
    _add_ctx(sp)
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.set_defaults(func=cmd_cone)

    sp = sub.add_parser("member", help="membership test with a violated inequality as certificate")
    sp.add_argument("kind", choices=CONE_KINDS)
    _add_ctx(sp)
    sp.add_argument("--weight", required=True, help="comma list of n integers")
    sp.set_defaults(func=cmd_member)

    sp = sub.add_parser("verify", help="run a verification suite")
    sp.add_argument("suite", choices=SUITES + ("all",))
    sp.add_argument("--max-n", type=int, default=6)
    sp.add_argument("--primes", default="2,3,5")
    sp.add_argument("--jobs", type=int, default=None,
                    help="worker processes (default: $STRATA_CONES_JOBS or 1)")
    sp.add_argument("--out", default=None, help="write the JSON report here instead of stdout")
    sp.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, EmptyStratumError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PhaMismatchError as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        return 1
    except ConeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
