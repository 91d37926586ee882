"""Command-line interface: ``linrec <command> ...`` or ``python -m linrec``.

Exit status is 0 on success, 2 on usage errors and 1 on domain errors.  In
``--format json`` mode a domain error is reported as one JSON object on
standard output.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from linrec import analysis, apps
from linrec.errors import ConsistencyError, DomainError
from linrec.kernels import available_backends
from linrec.recurrence import Recurrence, eval_closed, eval_iterative, eval_matrix, solve

_RATIONAL = re.compile(r"[+-]?\d+(/\d+)?")
_RATIONAL_OPTS = {"-A", "-B", "--a0", "--a1"}


def rational(text: str) -> Fraction:
    if not _RATIONAL.fullmatch(text):
        raise argparse.ArgumentTypeError(f"not an exact rational (p or p/q): {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError(f"zero denominator: {text!r}") from None


def natural(text: str) -> int:
    if not re.fullmatch(r"\+?\d+", text):
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    return int(text)


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse takes "-1/2" for an option flag; attach it to its option instead
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _RATIONAL_OPTS:
            nxt = next(it, None)
            if nxt is not None and re.fullmatch(r"-\d.*", nxt):
                out.append(f"{tok}={nxt}" if tok.startswith("--") else tok + nxt)
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
        else:
            out.append(tok)
    return out


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    rec = argparse.ArgumentParser(add_help=False)
    rec.add_argument("-A", type=rational, required=True)
    rec.add_argument("-B", type=rational, required=True)
    rec.add_argument("--a0", type=rational, required=True)
    rec.add_argument("--a1", type=rational, required=True)

    parser = argparse.ArgumentParser(
        prog="linrec",
        description="Exact evaluation and analysis of a[n+1] = A*a[n] + B*a[n-1].",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("eval", parents=[rec, fmt], help="compute the n-th term")
    p.add_argument("-n", type=natural, required=True)
    p.add_argument("--method", choices=("iter", "matrix", "closed"), default="matrix")

    sub.add_parser("solve", parents=[rec, fmt], help="print the closed form")

    p = sub.add_parser("check", parents=[rec, fmt], help="certify a sequence property")
    p.add_argument("property", choices=("increasing", "natural"))
    p.add_argument("--prefix", type=natural, default=100)

    p = sub.add_parser("ratio", parents=[rec, fmt], help="a[n+1]/a[n] and its distance to x+")
    p.add_argument("-n", type=natural, required=True)

    p = sub.add_parser("tilings", parents=[fmt], help="domino tilings of W4 x P(n-1)")
    p.add_argument("-n", type=natural, required=True)

    p = sub.add_parser("triples", parents=[fmt], help="near-isosceles Pythagorean triples")
    p.add_argument("--from", dest="k_from", type=natural, default=1)
    p.add_argument("--to", dest="k_to", type=natural, required=True)
    p.add_argument("--permissive", action="store_true", help="allow k=0, the triple (0,1,1)")

    p = sub.add_parser("pell", parents=[fmt], help="solution of p^2 - 2q^2 = (-1)^k")
    p.add_argument("-k", type=natural, required=True)

    p = sub.add_parser("verify", parents=[fmt], help="completeness cross-check")
    p.add_argument("--kmax", type=natural, required=True)
    p.add_argument("--bound", type=natural, required=True, help="hypotenuse bound")
    p.add_argument("--workers", type=natural, default=1)
    p.add_argument("--backend", choices=available_backends(), default=None)
    return parser


def _recurrence(args) -> Recurrence:
    return Recurrence(args.A, args.B, args.a0, args.a1)


class _Out:
    def __init__(self, fmt: str, stream):
        self.fmt = fmt
        self.stream = stream
        self.color = (
            fmt == "text" and "NO_COLOR" not in os.environ and getattr(stream, "isatty", lambda: False)()
        )

    def line(self, text: str = "") -> None:
        self.stream.write(text + "\n")

    def json(self, obj) -> None:
        self.line(json.dumps(obj, sort_keys=False, separators=(", ", ": ")))

    def verdict(self, ok: bool) -> str:
        word = "PASS" if ok else "FAIL"
        if self.color:
            return f"\033[{32 if ok else 31}m{word}\033[0m"
        return word


def _cmd_eval(args, out: _Out) -> None:
    r = _recurrence(args)
    if args.method == "iter":
        v = eval_iterative(r, args.n)
    elif args.method == "matrix":
        v = eval_matrix(r, args.n)
    else:
        v = eval_closed(solve(r), args.n)
    if out.fmt == "json":
        out.json({"n": args.n, "method": args.method, "value": str(v)})
    else:
        out.line(str(v))


def _cmd_solve(args, out: _Out) -> None:
    cf = solve(_recurrence(args))
    if out.fmt == "json":
        out.json(cf.to_dict())
    else:
        out.line(cf.formula())


def _cmd_check(args, out: _Out) -> None:
    r = _recurrence(args)
    fn = analysis.check_increasing if args.property == "increasing" else analysis.check_natural
    rep = fn(r, args.prefix)
    if out.fmt == "json":
        out.json(rep.to_dict())
        return
    out.line(f"property: {rep.property.value}")
    out.line(f"sufficient condition: {out.verdict(rep.condition_holds)}")
    out.line(f"bare condition: {out.verdict(bool(rep.paper_condition_holds))}")
    ce = "none" if rep.counterexample is None else str(rep.counterexample)
    out.line(f"verified prefix: {rep.verified_prefix}")
    out.line(f"counterexample: {ce}")


def _cmd_ratio(args, out: _Out) -> None:
    est = analysis.ratio_limit(solve(_recurrence(args)), args.n)
    if out.fmt == "json":
        out.json(est.to_dict())
    else:
        d = est.to_dict()
        out.line(f"ratio: {d['ratio']}")
        out.line(f"ratio ~ {d['ratio_decimal']}")
        out.line(f"|ratio - x+| <= {d['error_bound']}")


def _cmd_tilings(args, out: _Out) -> None:
    count = apps.domino_tilings_w4xp(args.n)
    if out.fmt == "json":
        out.json({"n": args.n, "count": apps._json_int(count)})
    else:
        out.line(str(count))


def _cmd_triples(args, out: _Out) -> None:
    for k in range(args.k_from, args.k_to + 1):
        t = apps.pyth_triple(k, permissive=args.permissive)
        if out.fmt == "json":
            out.json(t.to_dict())
        else:
            out.line(f"{t.m} {t.m + 1} {t.hyp}")


def _cmd_pell(args, out: _Out) -> None:
    s = apps.pell_solution(args.k)
    if out.fmt == "json":
        out.json(s.to_dict())
    else:
        out.line(f"p={s.p} q={s.q} r={s.r} s={s.s} sign={s.sign:+d}")


def _cmd_verify(args, out: _Out) -> None:
    rep = apps.verify_completeness(
        args.kmax, args.bound, backend=args.backend, workers=max(args.workers, 1)
    )
    if out.fmt == "json":
        out.json(rep.to_dict())
        return
    out.line(f"r^2 + s^2 = a_k (k <= {rep.k_max}): {out.verdict(rep.sum_of_squares_ok)}")
    out.line(f"legs {{2rs, r^2 - s^2}} = {{m, m+1}}: {out.verdict(rep.legs_ok)}")
    out.line(f"exhaustive scan, hypotenuse <= {rep.hyp_bound}: {out.verdict(rep.brute_force_ok)}")
    out.line("hypotenuses: " + " ".join(map(str, rep.found)))
    for f in rep.failures:
        out.line(f"  {f}")


_COMMANDS = {
    "eval": _cmd_eval,
    "solve": _cmd_solve,
    "check": _cmd_check,
    "ratio": _cmd_ratio,
    "tilings": _cmd_tilings,
    "triples": _cmd_triples,
    "pell": _cmd_pell,
    "verify": _cmd_verify,
}


def run(argv: list[str], stdout=None, stderr=None) -> int:
    """Execute one command; return the process exit status."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    old_err = sys.stderr
    sys.stderr = stderr
    try:
        args = parser.parse_args(_glue_negative_values(list(argv)))
    except SystemExit as e:
        return int(e.code or 0)
    finally:
        sys.stderr = old_err
    out = _Out(args.format, stdout)
    try:
        _COMMANDS[args.command](args, out)
    except (DomainError, ConsistencyError) as e:
        if args.format == "json":
            out.json({"error": type(e).__name__, "message": str(e)})
        else:
            stderr.write(f"linrec: {type(e).__name__}: {e}\n")
        return 1
    return 0


def main(argv: list[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
