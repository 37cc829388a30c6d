"""Command line front end.

Five subcommands cover the library surface:

  eval      threshold quantities at one exponent, JSON
  sweep     threshold masses over an exponent range, CSV or JSON
  envelope  multi-component density table over a radius range, CSV or JSON
  alpha0    crossing exponent of the threshold ordering, JSON
  verify    run the inequality ledger, JSON report

Exit codes: 0 success, 1 usage or domain error, 2 ledger verification
failure, 3 sweep completed with some rows unsolved.  Floating point fields
are written with 15 significant digits in CSV and full round-trip precision
in JSON; unsolved CSV fields read "nan" and JSON ones are null.

RIESZDROP_THREADS caps the sweep worker pool; unset or "0" means one
worker per CPU.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import NoReturn

from .errors import BracketError, ConvergenceError, DomainError
from .splitting import r_cn, rho_c1, rho_min, rho_n
from .thresholds import (
    _ALPHA0_BRACKET,
    RootSolveConfig,
    m_c1,
    m_of_eps,
    solve_alpha0,
    solve_eps0,
    solve_eps1,
    solve_m2,
    solve_r0,
)
from .verify import run_ledger

__all__ = ["main", "entrypoint"]

_SWEEP_FIELDS = ("alpha", "m_c1", "m_2", "m_eps0", "m_eps1")
_ENVELOPE_FIELDS = ("R", "rho_1", "rho_2", "rho_3", "rho_min", "n_opt")


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors, which this tool reserves for
    # ledger failures; remap to 1
    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _worker_count() -> int:
    raw = os.environ.get("RIESZDROP_THREADS")
    if raw is None or not raw.strip():
        return os.cpu_count() or 1
    try:
        n = int(raw)
    except ValueError:
        raise DomainError(f"RIESZDROP_THREADS must be an integer, got {raw!r}") from None
    if n < 0:
        raise DomainError(f"RIESZDROP_THREADS must be non-negative, got {n}")
    return n if n > 0 else (os.cpu_count() or 1)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _json_text(payload: object) -> str:
    return json.dumps(payload, indent=2, allow_nan=False) + "\n"


def _fmt(value: float | None) -> str:
    return "nan" if value is None else "%.15g" % value


def _csv_text(header: tuple[str, ...], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _cmd_eval(args: argparse.Namespace) -> int:
    alpha = args.alpha
    if not 0.0 < alpha <= 0.5:
        raise DomainError(f"eval: alpha must lie in (0, 0.5], got {alpha}")
    r0 = solve_r0(alpha)
    eps0 = solve_eps0(alpha)
    eps1 = solve_eps1(alpha)
    payload = {
        "alpha": alpha,
        "m_c1": m_c1(alpha),
        "R_c1": r_cn(1, alpha),
        "rho_c1": rho_c1(alpha),
        "m_2": math.pi * r0 * r0,
        "R_0": r0,
        "eps_0": eps0,
        "eps_1": eps1,
        "m_eps0": m_of_eps(eps0, alpha),
        "m_eps1": m_of_eps(eps1, alpha),
    }
    _emit(_json_text(payload), args.out)
    return 0


def _sweep_row(alpha: float) -> dict[str, float | None]:
    def attempt(fn):
        try:
            return fn()
        except (DomainError, BracketError, ConvergenceError):
            return None

    return {
        "alpha": alpha,
        "m_c1": attempt(lambda: m_c1(alpha)),
        "m_2": attempt(lambda: solve_m2(alpha)),
        "m_eps0": attempt(lambda: m_of_eps(solve_eps0(alpha), alpha)),
        "m_eps1": attempt(lambda: m_of_eps(solve_eps1(alpha), alpha)),
    }


def _cmd_sweep(args: argparse.Namespace) -> int:
    lo, hi, steps = args.alpha_min, args.alpha_max, args.steps
    if steps < 2:
        raise DomainError(f"sweep: steps must be at least 2, got {steps}")
    if not 0.0 <= lo < hi <= 0.5:
        raise DomainError(
            f"sweep: need 0 <= alpha-min < alpha-max <= 0.5, got {lo} and {hi}"
        )
    alphas = [lo + (hi - lo) * i / (steps - 1) for i in range(steps)]

    workers = _worker_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_sweep_row, alphas))
    else:
        rows = [_sweep_row(a) for a in alphas]

    if args.format == "json":
        _emit(_json_text(rows), args.out)
    else:
        table = [[_fmt(row[key]) for key in _SWEEP_FIELDS] for row in rows]
        _emit(_csv_text(_SWEEP_FIELDS, table), args.out)

    incomplete = any(row[key] is None for row in rows for key in _SWEEP_FIELDS)
    return 3 if incomplete else 0


def _cmd_envelope(args: argparse.Namespace) -> int:
    alpha, r_max, steps = args.alpha, args.r_max, args.steps
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"envelope: alpha must lie in (0, 1], got {alpha}")
    if not r_max > 0.0:
        raise DomainError(f"envelope: r-max must be positive, got {r_max}")
    if steps < 1:
        raise DomainError(f"envelope: steps must be at least 1, got {steps}")

    rows: list[dict] = []
    for i in range(1, steps + 1):
        r = r_max * i / steps
        best, n_opt = rho_min(r, alpha)
        rows.append(
            {
                "R": r,
                "rho_1": rho_n(1, r, alpha),
                "rho_2": rho_n(2, r, alpha),
                "rho_3": rho_n(3, r, alpha),
                "rho_min": best,
                "n_opt": n_opt,
            }
        )

    if args.format == "json":
        _emit(_json_text(rows), args.out)
    else:
        table = [
            [_fmt(row[key]) for key in _ENVELOPE_FIELDS[:-1]] + [str(row["n_opt"])]
            for row in rows
        ]
        _emit(_csv_text(_ENVELOPE_FIELDS, table), args.out)
    return 0


def _cmd_alpha0(args: argparse.Namespace) -> int:
    tol = args.tol
    if not tol > 0.0:
        raise DomainError(f"alpha0: tol must be positive, got {tol}")
    cfg = RootSolveConfig(_ALPHA0_BRACKET[0], _ALPHA0_BRACKET[1], rel_tol=tol)
    a0 = solve_alpha0(cfg)
    m_at = min(m_of_eps(solve_eps0(a0), a0), m_of_eps(solve_eps1(a0), a0))
    payload = {"alpha0": a0, "m_at_crossing": m_at, "tol": tol}
    _emit(_json_text(payload), args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    report = run_ledger(alpha_max=args.alpha_max, grid=args.grid)
    _emit(_json_text(report.to_dict()), args.out)
    return 0 if report.passed else 2


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="rieszdrop",
        description="Threshold masses and inequality checks for the planar "
        "perimeter-plus-Riesz droplet energy.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p_eval = sub.add_parser("eval", help="threshold quantities at one exponent")
    p_eval.add_argument("--alpha", type=float, required=True, help="kernel exponent, in (0, 0.5]")
    p_eval.add_argument("--out", help="write JSON here instead of stdout")
    p_eval.set_defaults(handler=_cmd_eval)

    p_sweep = sub.add_parser("sweep", help="threshold masses over an exponent range")
    p_sweep.add_argument("--alpha-min", type=float, default=0.005)
    p_sweep.add_argument("--alpha-max", type=float, default=0.045)
    p_sweep.add_argument("--steps", type=int, default=81, help="grid points, endpoints included")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--out", help="write output here instead of stdout")
    p_sweep.set_defaults(handler=_cmd_sweep)

    p_env = sub.add_parser("envelope", help="per-component densities over a radius range")
    p_env.add_argument("--alpha", type=float, required=True, help="kernel exponent, in (0, 1]")
    p_env.add_argument("--r-max", type=float, default=2.0, dest="r_max")
    p_env.add_argument("--steps", type=int, default=400, help="radii R = r-max * i / steps")
    p_env.add_argument("--format", choices=("csv", "json"), default="csv")
    p_env.add_argument("--out", help="write output here instead of stdout")
    p_env.set_defaults(handler=_cmd_envelope)

    p_a0 = sub.add_parser("alpha0", help="crossing exponent of the threshold ordering")
    p_a0.add_argument("--tol", type=float, default=1e-12, help="relative bisection tolerance")
    p_a0.add_argument("--out", help="write JSON here instead of stdout")
    p_a0.set_defaults(handler=_cmd_alpha0)

    p_ver = sub.add_parser("verify", help="machine-check the inequality ledger")
    p_ver.add_argument("--alpha-max", type=float, default=0.034)
    p_ver.add_argument("--grid", type=int, default=1000, help="exponent grid points")
    p_ver.add_argument("--out", help="write the JSON report here instead of stdout")
    p_ver.set_defaults(handler=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.handler(args)
    except (DomainError, BracketError, ConvergenceError) as exc:
        print(f"rieszdrop: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"rieszdrop: error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> NoReturn:
    raise SystemExit(main())
