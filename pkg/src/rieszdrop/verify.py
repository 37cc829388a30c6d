"""Machine check of the inequality ledger behind the threshold ordering.

The quantitative argument rests on eighteen closed-form inequalities that
must hold for every exponent alpha in (0, alpha_max] (default 0.034), at
the fixed probes eps = 0.846 and R = 0.945.  run_ledger sweeps a uniform
alpha grid, records the attained extreme of each quantity together with
where it occurred, and compares against the claimed bound.  A failed check
is a reported result, not an exception.

This is a floating-point grid check, not certified interval arithmetic;
the attained margins (smallest around 8e-5) sit far above double-precision
evaluation error (~1e-13), which is what makes the grid verdict meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .specfun import gamma
from .splitting import r_cn, rho_c1
from .thresholds import (
    c0,
    c1,
    c2,
    c3,
    f1,
    f2,
    m_c1,
    m_of_eps,
    rho0,
    solve_eps0,
    solve_eps1,
    solve_m2,
)

__all__ = ["LedgerCheck", "LedgerReport", "f3", "run_ledger"]


def f3(alpha: float, r: float) -> float:
    """Clearance rho0(r) - rho_c1 of the comparison density over the envelope level."""
    return rho0(r, alpha) - rho_c1(alpha)


@dataclass(frozen=True)
class LedgerCheck:
    """One verified inequality: attained extreme vs claimed bound."""

    name: str
    claim: str
    attained: float
    bound: float
    margin: float
    passed: bool
    worst_alpha: float

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "claim": self.claim,
            "attained": self.attained,
            "bound": self.bound,
            "margin": self.margin,
            "pass": self.passed,
            "worst_alpha": self.worst_alpha,
        }


@dataclass(frozen=True)
class LedgerReport:
    """Grid verdict over all ledger checks."""

    checks: tuple[LedgerCheck, ...]
    grid_points: int
    alpha_max: float
    eps_probe: float
    r_probe: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "grid_points": self.grid_points,
            "alpha_max": self.alpha_max,
            "eps_probe": self.eps_probe,
            "r_probe": self.r_probe,
            "checks": [c.to_dict() for c in self.checks],
        }


# (name, claim template, value key, kind, lo, hi); kind one of
# window (lo <= v <= hi), le, lt, ge, gt against hi/lo respectively
_CHECK_TABLE: tuple[tuple[str, str, str, str, float | None, float | None], ...] = (
    ("gamma_2_minus_alpha", "0.986 <= gamma(2 - alpha) <= 1", "g2a", "window", 0.986, 1.0),
    ("gamma_2_minus_half_alpha", "0.992 <= gamma(2 - alpha/2) <= 1", "g2ah", "window", 0.992, 1.0),
    ("gamma_3_minus_half_alpha", "1.968 <= gamma(3 - alpha/2) <= 2", "g3ah", "window", 1.968, 2.0),
    ("gamma_1_minus_alpha", "1 <= gamma(1 - alpha) <= 1.021", "g1a", "window", 1.0, 1.021),
    ("m_c1_window", "2.007 <= m_c1 <= 2.087", "m_c1", "window", 2.007, 2.087),
    ("c0_cap", "c0(alpha, {eps}) <= 0.121", "c0", "le", None, 0.121),
    ("c3_cap", "c3(alpha, {eps}) <= 0.557", "c3", "le", None, 0.557),
    ("f1_negative", "f1(alpha, {eps}) < 0", "f1", "lt", None, 0.0),
    ("c1_floor", "c1(alpha, {eps}) >= 3.009", "c1", "ge", 3.009, None),
    ("c2_cap", "c2(alpha) <= 3.196", "c2", "le", None, 3.196),
    ("f2_floor", "f2(alpha, {eps}) >= 0.575", "f2", "ge", 0.575, None),
    ("r_c1_window", "0.799 <= r_cn(1, alpha) <= 0.815", "r_c1", "window", 0.799, 0.815),
    ("rho_c1_cap", "rho_c1(alpha) <= 4.656", "rho_c1", "le", None, 4.656),
    ("rho0_probe_floor", "rho0({r}, alpha) >= 4.677", "rho0_probe", "ge", 4.677, None),
    ("f3_floor", "f3(alpha, {r}) >= 0.021", "f3", "ge", 0.021, None),
    ("m_2_cap", "m_2(alpha) < 2.806", "m_2", "lt", None, 2.806),
    ("m_eps0_floor", "m(eps_0(alpha)) > 2.806", "m_eps0", "gt", 2.806, None),
    ("m_eps1_floor", "m(eps_1(alpha)) > 2.806", "m_eps1", "gt", 2.806, None),
)


def _ledger_values(alpha: float, eps_probe: float, r_probe: float) -> dict[str, float]:
    rho0_probe = rho0(r_probe, alpha)
    level = rho_c1(alpha)
    return {
        "g2a": gamma(2.0 - alpha),
        "g2ah": gamma(2.0 - alpha / 2.0),
        "g3ah": gamma(3.0 - alpha / 2.0),
        "g1a": gamma(1.0 - alpha),
        "m_c1": m_c1(alpha),
        "c0": c0(alpha, eps_probe),
        "c3": c3(alpha, eps_probe),
        "f1": f1(alpha, eps_probe),
        "c1": c1(alpha, eps_probe),
        "c2": c2(alpha),
        "f2": f2(alpha, eps_probe),
        "r_c1": r_cn(1, alpha),
        "rho_c1": level,
        "rho0_probe": rho0_probe,
        "f3": rho0_probe - level,
        "m_2": solve_m2(alpha),
        "m_eps0": m_of_eps(solve_eps0(alpha), alpha),
        "m_eps1": m_of_eps(solve_eps1(alpha), alpha),
    }


def run_ledger(
    alpha_max: float = 0.034,
    eps_probe: float = 0.846,
    r_probe: float = 0.945,
    grid: int = 1000,
) -> LedgerReport:
    """Check every ledger inequality on alpha = alpha_max * i / grid, i = 1..grid.

    Solver exceptions propagate; an inequality that merely fails is
    reported with passed = False and the violating extreme.
    """
    if not 0.0 < alpha_max < 1.0:
        raise DomainError(f"run_ledger: alpha_max must lie in (0, 1), got {alpha_max}")
    if grid < 2:
        raise DomainError(f"run_ledger: grid must be at least 2, got {grid}")
    if not eps_probe > 0.0:
        raise DomainError(f"run_ledger: eps_probe must be positive, got {eps_probe}")
    if not r_probe > 0.0:
        raise DomainError(f"run_ledger: r_probe must be positive, got {r_probe}")

    keys = [row[2] for row in _CHECK_TABLE]
    min_val = dict.fromkeys(keys, float("inf"))
    max_val = dict.fromkeys(keys, float("-inf"))
    min_at = dict.fromkeys(keys, 0.0)
    max_at = dict.fromkeys(keys, 0.0)

    for i in range(1, grid + 1):
        alpha = alpha_max * i / grid
        values = _ledger_values(alpha, eps_probe, r_probe)
        for key, value in values.items():
            if value < min_val[key]:
                min_val[key], min_at[key] = value, alpha
            if value > max_val[key]:
                max_val[key], max_at[key] = value, alpha

    checks: list[LedgerCheck] = []
    for name, claim_tpl, key, kind, lo, hi in _CHECK_TABLE:
        claim = claim_tpl.format(eps=eps_probe, r=r_probe)
        if kind == "window":
            lo_margin = min_val[key] - lo
            hi_margin = hi - max_val[key]
            ok = lo_margin >= 0.0 and hi_margin >= 0.0
            if lo_margin <= hi_margin:
                attained, bound, margin, worst = min_val[key], lo, lo_margin, min_at[key]
            else:
                attained, bound, margin, worst = max_val[key], hi, hi_margin, max_at[key]
        elif kind in ("le", "lt"):
            attained, bound, worst = max_val[key], hi, max_at[key]
            margin = bound - attained
            ok = margin > 0.0 if kind == "lt" else margin >= 0.0
        else:  # ge / gt
            attained, bound, worst = min_val[key], lo, min_at[key]
            margin = attained - bound
            ok = margin > 0.0 if kind == "gt" else margin >= 0.0
        checks.append(
            LedgerCheck(
                name=name,
                claim=claim,
                attained=attained,
                bound=bound,
                margin=margin,
                passed=ok,
                worst_alpha=worst,
            )
        )

    return LedgerReport(
        checks=tuple(checks),
        grid_points=grid,
        alpha_max=alpha_max,
        eps_probe=eps_probe,
        r_probe=r_probe,
        passed=all(c.passed for c in checks),
    )
