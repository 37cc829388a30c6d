"""Special functions under the disk potential: gamma, 2F1, and the potential itself."""

import math
import random

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rieszdrop.errors import ConvergenceError, DomainError
from rieszdrop.specfun import (
    SeriesConfig,
    disk_potential,
    disk_potential_max_slope,
    gamma,
    hyp2f1,
)

mpmath.mp.dps = 30

SEED = 20260819

# 40-digit reference values, rounded to double-friendly precision
GAMMA_1966 = 0.98609831298053193552
HYP_HALF = 1.000695746378497379324883  # 2F1(0.05, 0.05; 2; 0.5)
HYP_GAUSS = 1.0491916435698633120403  # 2F1(0.25, 0.25; 2; 1)
VB_AT_ONE = {
    0.1: 3.1468268887421140531,
    0.5: 3.2961327596468834105,
    1.0: 4.0,
    1.5: 6.7777046783518326929,
}
VB_INSIDE = 3.988266263759679714681328  # r = 0.5, alpha = 0.5
VB_OUTSIDE = 2.240064105185437951834972  # r = 2.0, alpha = 0.5
SLOPE_MAX = {
    0.034: 0.108714381745383869815736,
    0.5: 2.4720995697351625579118,
}
# branch gap vB(1-h) - vB(1+h); grows like h^(2-alpha), so only alpha < 1
# stays below 1e-5 at h = 1e-6
GAP_1E6 = {0.1: 6.6432875e-7, 0.5: 4.9410041e-6, 1.0: 5.9579808e-5, 1.5: 0.020966294}
GAP_1E4 = {0.1: 6.6424368e-5, 0.5: 4.9122487e-4, 1.0: 4.1159128e-3, 1.5: 0.20874795}
RAW_CENTRAL_DIFF = -2.4670477669762710997  # h = 1e-5, alpha = 0.5


def rel(got, want):
    return abs(got - want) / max(1.0, abs(want))


def test_gamma_matches_stdlib():
    rng = random.Random(SEED)
    xs = [rng.uniform(1e-3, 50.0) for _ in range(1000)]
    xs += [1e-6, 0.25, 0.5, 1.0, 1.5, 2.0, 10.0, 50.0, 100.0, 170.0]
    worst = max(abs(gamma(x) - math.gamma(x)) / math.gamma(x) for x in xs)
    assert worst < 5e-13


def test_gamma_spot_values():
    assert rel(gamma(0.5), math.sqrt(math.pi)) < 1e-14
    assert rel(gamma(1.0), 1.0) < 1e-14
    assert rel(gamma(2.0), 1.0) < 1e-14
    assert rel(gamma(5.0), 24.0) < 1e-14
    assert rel(gamma(1.966), GAMMA_1966) < 1e-14


def test_gamma_domain():
    for x in (0.0, -1.0, -0.5, -7.2):
        with pytest.raises(DomainError):
            gamma(x)


@given(st.floats(min_value=0.05, max_value=30.0, allow_nan=False))
@settings(deadline=None)
def test_gamma_recurrence(x):
    assert abs(gamma(x + 1.0) / (x * gamma(x)) - 1.0) < 1e-11


def test_hyp2f1_spot_values():
    assert rel(hyp2f1(0.05, 0.05, 2.0, 0.5), HYP_HALF) < 1e-14
    assert hyp2f1(0.3, -0.7, 1.4, 0.0) == 1.0
    assert hyp2f1(0.0, 0.9, 1.4, 0.6) == 1.0  # terminating series


def test_hyp2f1_gauss_endpoint():
    assert rel(hyp2f1(0.25, 0.25, 2.0, 1.0), HYP_GAUSS) < 1e-14
    # z = 1 converges only for c - a - b > 0
    with pytest.raises(DomainError):
        hyp2f1(1.0, 1.0, 2.0, 1.0)
    with pytest.raises(DomainError):
        hyp2f1(0.5, 1.5, 2.0, 1.0)


def test_hyp2f1_domain():
    for c in (0.0, -1.0):
        with pytest.raises(DomainError):
            hyp2f1(0.5, 0.5, c, 0.5)
    for z in (-0.01, 1.01):
        with pytest.raises(DomainError):
            hyp2f1(0.5, 0.5, 2.0, z)


def test_hyp2f1_series_cap():
    with pytest.raises(ConvergenceError):
        hyp2f1(0.3, 0.4, 1.2, 0.7, SeriesConfig(max_terms=3))


def test_series_config_validation():
    with pytest.raises(DomainError):
        SeriesConfig(rel_term_tol=0.0)
    with pytest.raises(DomainError):
        SeriesConfig(max_terms=0)


@given(
    st.floats(min_value=-2.0, max_value=2.0),
    st.floats(min_value=-2.0, max_value=2.0),
    st.floats(min_value=0.1, max_value=4.0),
    st.floats(min_value=0.0, max_value=0.75),
)
@settings(deadline=None)
def test_hyp2f1_symmetric_in_a_b(a, b, c, z):
    assert hyp2f1(a, b, c, z) == hyp2f1(b, a, c, z)


def test_hyp2f1_against_mpmath():
    # the two shapes the disk potential uses, straddling the z = 0.75
    # branch point of the implementation; alpha near 1 and near 2 take the
    # degenerate long-series path
    zs = (0.01, 0.3, 0.6, 0.74, 0.76, 0.9, 0.97, 0.999)
    worst = 0.0
    for alpha in (0.1, 0.5, 0.9, 1.0, 1.02, 1.1, 1.5, 1.9):
        a = mpmath.mpf(alpha)
        for z in zs:
            got = hyp2f1(alpha / 2.0, alpha / 2.0, 2.0, z)
            want = float(mpmath.hyp2f1(a / 2, a / 2, 2, z))
            worst = max(worst, rel(got, want))
            got = hyp2f1((alpha - 2.0) / 2.0, alpha / 2.0, 1.0, z)
            want = float(mpmath.hyp2f1((a - 2) / 2, a / 2, 1, z))
            worst = max(worst, rel(got, want))
    assert worst < 1e-12


def vb_reference(r, alpha):
    a = mpmath.mpf(alpha)
    rr = mpmath.mpf(r)
    if rr >= 1:
        return float(mpmath.pi / rr**a * mpmath.hyp2f1(a / 2, a / 2, 2, 1 / rr**2))
    return float(2 * mpmath.pi / (2 - a) * mpmath.hyp2f1((a - 2) / 2, a / 2, 1, rr**2))


def test_disk_potential_center_value():
    # at the center the potential is exactly 2 pi / (2 - alpha)
    for alpha in (0.034, 0.1, 0.5, 1.0, 1.5, 1.9):
        assert disk_potential(0.0, alpha) == 2.0 * math.pi / (2.0 - alpha)


def test_disk_potential_boundary_values():
    for alpha, want in VB_AT_ONE.items():
        assert rel(disk_potential(1.0, alpha), want) < 1e-12


def test_disk_potential_branch_agreement_at_boundary():
    # inner and outer closed forms both evaluate at r = 1 through the
    # z = 1 endpoint; they must agree there
    for alpha in (0.1, 0.5, 1.0, 1.5):
        outer = math.pi * hyp2f1(alpha / 2.0, alpha / 2.0, 2.0, 1.0)
        inner = 2.0 * math.pi / (2.0 - alpha) * hyp2f1((alpha - 2.0) / 2.0, alpha / 2.0, 1.0, 1.0)
        assert disk_potential(1.0, alpha) == outer
        assert rel(inner, outer) < 1e-9


def test_disk_potential_spot_values():
    assert rel(disk_potential(0.5, 0.5), VB_INSIDE) < 1e-13
    assert rel(disk_potential(2.0, 0.5), VB_OUTSIDE) < 1e-13


def test_disk_potential_against_mpmath():
    rs = [0.05 + 0.2 * k for k in range(25)] + [0.95, 0.99, 1.0, 1.01, 1.05]
    worst = 0.0
    for alpha in (0.1, 0.5, 1.0, 1.5):
        for r in rs:
            worst = max(worst, rel(disk_potential(r, alpha), vb_reference(r, alpha)))
    assert worst < 1e-12


def test_disk_potential_strictly_decreasing():
    for alpha in (0.1, 0.5, 1.0, 1.5):
        prev = disk_potential(0.0, alpha)
        for k in range(1, 61):
            cur = disk_potential(0.05 * k, alpha)
            assert cur < prev
            prev = cur


def test_disk_potential_domain():
    with pytest.raises(DomainError):
        disk_potential(-0.1, 0.5)
    for alpha in (0.0, 2.0, -0.3, 2.5):
        with pytest.raises(DomainError):
            disk_potential(1.0, alpha)


def test_branch_continuity_gap():
    for alpha, want in GAP_1E6.items():
        gap6 = disk_potential(1.0 - 1e-6, alpha) - disk_potential(1.0 + 1e-6, alpha)
        gap4 = disk_potential(1.0 - 1e-4, alpha) - disk_potential(1.0 + 1e-4, alpha)
        assert 0.0 < gap6 < gap4
        assert rel(gap6, want) < 1e-4
        assert rel(gap4, GAP_1E4[alpha]) < 1e-4
    # C1 regime: the gap vanishes fast enough to sit under 1e-5 already
    assert abs(disk_potential(1.0 - 1e-6, 0.1) - disk_potential(1.0 + 1e-6, 0.1)) < 1e-5
    assert abs(disk_potential(1.0 - 1e-6, 0.5) - disk_potential(1.0 + 1e-6, 0.5)) < 1e-5
    # above alpha = 1 the one-sided slopes blow up; continuity shows only
    # in the gap decaying with h, checked above
    assert abs(disk_potential(1.0 - 1e-6, 1.0) - disk_potential(1.0 + 1e-6, 1.0)) < 1e-4
    assert abs(disk_potential(1.0 - 1e-6, 1.5) - disk_potential(1.0 + 1e-6, 1.5)) < 0.05


def test_boundary_slope_spot_values():
    for alpha, want in SLOPE_MAX.items():
        assert rel(disk_potential_max_slope(alpha), want) < 1e-13


def test_boundary_slope_domain():
    for alpha in (0.0, 1.0, 1.5, -0.1):
        with pytest.raises(DomainError):
            disk_potential_max_slope(alpha)


def central_diff(alpha, h):
    return (disk_potential(1.0 + h, alpha) - disk_potential(1.0 - h, alpha)) / (2.0 * h)


def test_boundary_slope_richardson_recovery():
    # a plain central difference converges like h^(1-alpha) because the
    # potential is not C2 at r = 1; the two-scale combination cancels the
    # leading singular term and recovers the slope to 1e-4 and better
    h = 1e-5
    for alpha in (0.034, 0.5):
        w = 4.0 ** (1.0 - alpha)
        richardson = (w * central_diff(alpha, h / 4.0) - central_diff(alpha, h)) / (w - 1.0)
        assert abs(abs(richardson) - disk_potential_max_slope(alpha)) < 1e-4


def test_raw_central_difference_frozen():
    cd = central_diff(0.5, 1e-5)
    assert abs(cd - RAW_CENTRAL_DIFF) < 1e-8
    # the uncorrected stencil misses the true slope by about 5e-3
    gap = disk_potential_max_slope(0.5) - abs(cd)
    assert 4e-3 < gap < 6e-3


def test_determinism():
    assert gamma(3.7) == gamma(3.7)
    assert disk_potential(0.7, 0.3) == disk_potential(0.7, 0.3)
    assert hyp2f1(0.25, 0.25, 2.0, 0.9) == hyp2f1(0.25, 0.25, 2.0, 0.9)
