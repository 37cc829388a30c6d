"""Inequality ledger: grid sweep, reported extremes, failure reporting."""

import json
from importlib import resources

import jsonschema
import pytest

from rieszdrop.errors import DomainError
from rieszdrop.splitting import r_cn
from rieszdrop.thresholds import solve_r0
from rieszdrop.verify import LedgerCheck, LedgerReport, f3, run_ledger

CHECK_ORDER = (
    "gamma_2_minus_alpha",
    "gamma_2_minus_half_alpha",
    "gamma_3_minus_half_alpha",
    "gamma_1_minus_alpha",
    "m_c1_window",
    "c0_cap",
    "c3_cap",
    "f1_negative",
    "c1_floor",
    "c2_cap",
    "f2_floor",
    "r_c1_window",
    "rho_c1_cap",
    "rho0_probe_floor",
    "f3_floor",
    "m_2_cap",
    "m_eps0_floor",
    "m_eps1_floor",
)

# one-sided checks attain their extreme at alpha_max itself, so the
# values are grid-independent once the endpoint is on the grid
ONE_SIDED_ATTAINED = {
    "c0_cap": 0.098799409102941438,
    "c3_cap": 0.52530993165152762,
    "f1_negative": -0.070221510389057218,
    "c1_floor": 3.0120040454765125,
    "c2_cap": 3.1959233505491285,
    "f2_floor": 0.59889275293224753,
    "rho_c1_cap": 4.5569761279403016,
    "rho0_probe_floor": 4.7504340832583498,
    "f3_floor": 0.19345795531804821,
    "m_2_cap": 2.4079246783906547,
    "m_eps0_floor": 4.9338592164959598,
    "m_eps1_floor": 2.9104694335445971,
}


@pytest.fixture(scope="module")
def report():
    return run_ledger()


def rel(got, want):
    return abs(got - want) / abs(want)


def test_default_ledger_passes(report):
    assert isinstance(report, LedgerReport)
    assert report.passed
    assert report.grid_points == 1000
    assert report.alpha_max == 0.034
    assert len(report.checks) == 18
    assert tuple(c.name for c in report.checks) == CHECK_ORDER
    for c in report.checks:
        assert isinstance(c, LedgerCheck)
        assert c.passed
        assert c.margin > 0.0
        assert "{" not in c.claim


def test_one_sided_extremes(report):
    by_name = {c.name: c for c in report.checks}
    for name, want in ONE_SIDED_ATTAINED.items():
        c = by_name[name]
        assert rel(c.attained, want) < 1e-9
        assert c.worst_alpha == 0.034


def test_window_extremes_sit_on_grid_endpoints(report):
    endpoints = {0.034 * 1 / 1000, 0.034}
    for c in report.checks:
        if c.name.endswith("_window") or c.name.startswith("gamma_"):
            assert c.worst_alpha in endpoints


def test_coarse_grid_same_verdict(report):
    coarse = run_ledger(grid=2)
    assert coarse.passed == report.passed
    assert tuple(c.name for c in coarse.checks) == CHECK_ORDER
    assert all(c.passed for c in coarse.checks)


def test_failure_reporting():
    rep = run_ledger(alpha_max=0.05, grid=40)
    assert not rep.passed
    assert rep.passed == all(c.passed for c in rep.checks)
    failed = {c.name for c in rep.checks if not c.passed}
    # both extremes land on the endpoint, so the verdict is grid-stable
    assert "gamma_2_minus_alpha" in failed
    assert "m_eps1_floor" in failed
    for c in rep.checks:
        if not c.passed:
            assert c.margin <= 0.0


def test_f3_clearance():
    # stays above the ledger floor on the working range at the probe radius
    for k in range(1, 35):
        alpha = 0.034 * k / 34
        assert f3(alpha, 0.945) >= 0.021
    # dips negative at the first crossover radius
    for alpha in (0.01, 0.1, 0.3, 0.5):
        assert f3(alpha, r_cn(1, alpha)) < 0.0
    # sign change brackets the nonexistence scale
    for alpha in (0.01, 0.034, 0.3):
        r0 = solve_r0(alpha)
        assert f3(alpha, r0 * (1.0 - 1e-6)) < 0.0 < f3(alpha, r0 * (1.0 + 1e-6))
    with pytest.raises(DomainError):
        f3(0.6, 1.0)
    with pytest.raises(DomainError):
        f3(0.1, 0.0)


def test_to_dict_shape(report):
    d = report.to_dict()
    assert set(d) == {"passed", "grid_points", "alpha_max", "eps_probe", "r_probe", "checks"}
    assert d["passed"] is True
    assert len(d["checks"]) == 18
    for cd in d["checks"]:
        assert set(cd) == {"name", "claim", "attained", "bound", "margin", "pass", "worst_alpha"}
        assert cd["pass"] is True
    # the dict is exactly what the CLI serializes
    json.dumps(d, allow_nan=False)


def test_report_matches_schema(report):
    schema_text = (
        resources.files("rieszdrop").joinpath("schemas/output.schema.json").read_text()
    )
    schema = json.loads(schema_text)
    jsonschema.Draft202012Validator(schema).validate(report.to_dict())


def test_run_ledger_domain():
    with pytest.raises(DomainError):
        run_ledger(alpha_max=0.0)
    with pytest.raises(DomainError):
        run_ledger(alpha_max=1.0)
    with pytest.raises(DomainError):
        run_ledger(grid=1)
    with pytest.raises(DomainError):
        run_ledger(eps_probe=0.0)
    with pytest.raises(DomainError):
        run_ledger(r_probe=-1.0)


def test_ledger_deterministic():
    assert run_ledger(grid=50) == run_ledger(grid=50)
