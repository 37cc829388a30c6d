"""Energy of n equal disks and the lower envelope over n.

A configuration of n far-apart unit-density disks of total radius-scale R
(each disk has radius R / sqrt(n)) carries, per unit area, the normalized
energy density

    rho_n(R) = n E(R / sqrt(n)) / (pi R^2) = rho_1(R / sqrt(n)),

where E(r) = 2 pi r + V0 r^(4 - alpha) is the single-disk energy and

    V0(alpha) = 2 pi^2 Gamma(2 - alpha) / (Gamma(2 - alpha/2) Gamma(3 - alpha/2))

is the self-interaction constant of the unit disk.  Consecutive densities
rho_n and rho_(n+1) cross exactly once, at

    r_cn(n) = ( 2 pi (sqrt(n+1) - sqrt(n))
              / (V0 (n^(alpha/2 - 1) - (n+1)^(alpha/2 - 1))) )^(1/(3 - alpha)),

so the pointwise lower envelope rho_min(R) = min_n rho_n(R) is attained by
n on the segment (r_cn(n-1), r_cn(n)], with ties going to the smaller n.
alpha = 0 is an admitted limiting parameter; every closed form here is
finite there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError
from .specfun import gamma

__all__ = [
    "EnvelopeSegment",
    "v0_const",
    "disk_energy",
    "rho_n",
    "r_cn",
    "r_n_min",
    "rho_c1",
    "rho_min",
    "envelope_segments",
    "energy_upper_bound",
]

# linear scan below this n, geometric bracket + bisection above
_SCAN_CUTOVER = 64


@dataclass(frozen=True)
class EnvelopeSegment:
    """Maximal interval (r_lo, r_hi] on which n disks minimize the density."""

    n: int
    r_lo: float
    r_hi: float


def _check_alpha(alpha: float, hi: float, what: str) -> None:
    if not 0.0 <= alpha < 2.0 or alpha > hi:
        hi_txt = "2)" if hi == 2.0 else f"{hi}]"
        raise DomainError(f"{what}: alpha must lie in [0, {hi_txt}, got {alpha}")


def _check_n(n: int, what: str) -> int:
    if n != int(n) or n < 1:
        raise DomainError(f"{what}: n must be an integer >= 1, got {n}")
    return int(n)


def v0_const(alpha: float) -> float:
    """Self-interaction energy of the unit disk under the |x-y|^(-alpha) kernel."""
    _check_alpha(alpha, 2.0, "v0_const")
    return (
        2.0
        * math.pi**2
        * gamma(2.0 - alpha)
        / (gamma(2.0 - alpha / 2.0) * gamma(3.0 - alpha / 2.0))
    )


def disk_energy(r: float, alpha: float) -> float:
    """Perimeter plus interaction energy of a single disk of radius r."""
    _check_alpha(alpha, 2.0, "disk_energy")
    if not r > 0.0:
        raise DomainError(f"disk_energy: r must be positive, got {r}")
    return 2.0 * math.pi * r + v0_const(alpha) * r ** (4.0 - alpha)


def rho_n(n: int, r: float, alpha: float) -> float:
    """Energy per unit area of n equal disks at total radius-scale r."""
    n = _check_n(n, "rho_n")
    _check_alpha(alpha, 2.0, "rho_n")
    if not r > 0.0:
        raise DomainError(f"rho_n: r must be positive, got {r}")
    return n * disk_energy(r / math.sqrt(n), alpha) / (math.pi * r * r)


def r_cn(n: int, alpha: float) -> float:
    """Crossover scale where n disks and n+1 disks have equal density.

    Both differences in the defining ratio cancel catastrophically for
    large n, so they are evaluated as 1/(sqrt(n+1)+sqrt(n)) and through
    expm1/log1p respectively.
    """
    n = _check_n(n, "r_cn")
    _check_alpha(alpha, 2.0, "r_cn")
    num = 2.0 * math.pi / (math.sqrt(n + 1.0) + math.sqrt(n))
    den = (
        -v0_const(alpha)
        * float(n) ** (alpha / 2.0 - 1.0)
        * math.expm1((alpha / 2.0 - 1.0) * math.log1p(1.0 / n))
    )
    return (num / den) ** (1.0 / (3.0 - alpha))


def r_n_min(n: int, alpha: float) -> float:
    """Scale minimizing rho_n; the minima shift like sqrt(n).

    Restricted to alpha <= 1, where the single-disk density is strictly
    convex with a unique interior minimum.
    """
    n = _check_n(n, "r_n_min")
    _check_alpha(alpha, 1.0, "r_n_min")
    return math.sqrt(n) * (2.0 * math.pi / (v0_const(alpha) * (2.0 - alpha))) ** (
        1.0 / (3.0 - alpha)
    )


def rho_c1(alpha: float) -> float:
    """Density at the first crossover, rho_1(r_cn(1)); the flat-envelope level."""
    _check_alpha(alpha, 2.0, "rho_c1")
    return rho_n(1, r_cn(1, alpha), alpha)


def rho_min(r: float, alpha: float, n_cap: int = 1_000_000) -> tuple[float, int]:
    """Lower envelope min_n rho_n(r) together with the minimizing n.

    Walks n upward while r exceeds the crossover r_cn(n); beyond n = 64 the
    segment is located by geometric doubling plus integer bisection on the
    increasing sequence r_cn.  Raises ConvergenceError when the minimizing
    n would exceed n_cap.
    """
    _check_alpha(alpha, 1.0, "rho_min")
    if not r > 0.0:
        raise DomainError(f"rho_min: r must be positive, got {r}")
    n_cap = _check_n(n_cap, "rho_min n_cap")
    n = 1
    while n <= min(_SCAN_CUTOVER, n_cap):
        if r <= r_cn(n, alpha):
            return rho_n(n, r, alpha), n
        n += 1
    if n > n_cap:
        raise ConvergenceError(f"rho_min: minimizing n exceeds cap {n_cap} at r = {r}")
    lo = _SCAN_CUTOVER  # r_cn(lo) < r
    hi = min(2 * _SCAN_CUTOVER, n_cap)
    while r_cn(hi, alpha) < r:
        if hi >= n_cap:
            raise ConvergenceError(
                f"rho_min: minimizing n exceeds cap {n_cap} at r = {r}"
            )
        lo = hi
        hi = min(2 * hi, n_cap)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if r_cn(mid, alpha) < r:
            lo = mid
        else:
            hi = mid
    return rho_n(hi, r, alpha), hi


def envelope_segments(alpha: float, r_max: float) -> list[EnvelopeSegment]:
    """Envelope segments (r_cn(n-1), r_cn(n)] covering (0, r_max]."""
    _check_alpha(alpha, 1.0, "envelope_segments")
    if not r_max > 0.0:
        raise DomainError(f"envelope_segments: r_max must be positive, got {r_max}")
    segments: list[EnvelopeSegment] = []
    lo = 0.0
    n = 1
    while lo < r_max:
        hi = r_cn(n, alpha)
        segments.append(EnvelopeSegment(n=n, r_lo=lo, r_hi=hi))
        lo = hi
        n += 1
    return segments


def energy_upper_bound(m: float, alpha: float) -> float:
    """Linear-in-mass energy bound m * rho_c1 for masses above the crossover.

    Valid once m >= pi * r_cn(1)^2, the mass at which splitting into two
    disks first matches a single disk.
    """
    _check_alpha(alpha, 1.0, "energy_upper_bound")
    rc = r_cn(1, alpha)
    m_split = math.pi * rc * rc
    if m < m_split:
        raise DomainError(
            f"energy_upper_bound: m = {m} is below the splitting mass {m_split}"
        )
    return m * rho_c1(alpha)
