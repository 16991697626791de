"""Unit tests for verification.py.

These tests validate the batch verification suite, including:
    - VerifyConfig: Validation and environment defaults
    - check_*: Individual checks on a small corpus
    - run_verification: The full report and its tabular and JSON forms

Edge cases tested:
    - A deliberately broken X must be caught with a counterexample
    - An orientation that depends on the start passage must be caught
    - Non-positive bounds and out-of-range seeds
    - Seeds read from WARPKNOT_SEED

The configuration is kept small so the whole suite runs in seconds.
"""

import json

import pandas as pd
import pytest

from warpknot import verification
from warpknot.csv_utils import write_csv_file
from warpknot.diagram_core import crossing_change
from warpknot.json_utils import write_json_file
from warpknot.planar import OrientationChoice
from warpknot.verification import (
    CheckResult,
    VerifyConfig,
    VerifyReport,
    check_crossing_change,
    check_plane_curves,
    check_realizability,
    check_state_sums,
    check_warping_degree_bound,
    check_warping_factorization,
    check_worked_example,
    run_verification,
)

CHECK_NAMES = [
    "worked_example",
    "state_sum_closed_form",
    "warping_factorization",
    "edge_degree_step_rule",
    "crossing_change_identities",
    "span_bound",
    "reverse_mirror",
    "alternating_characterization",
    "one_bridge_characterization",
    "realizability_round_trip",
    "warping_degree_bound",
    "alternating_even_asymmetry",
    "edge_degree_distribution",
    "plane_curve_pipeline",
    "orientation_independence",
]


@pytest.fixture
def config():
    """A configuration small enough for unit tests."""
    return VerifyConfig(
        max_exhaustive_n=3,
        random_samples=50,
        random_max_n=6,
        statesum_limit=10,
        max_sweep_n=3,
        random_shadows_per_n=2,
        random_shadow_max_n=5,
    )


@pytest.fixture(scope="module")
def report():
    """One full verification run shared by the report tests."""
    return run_verification(
        VerifyConfig(
            max_exhaustive_n=3,
            random_samples=50,
            random_max_n=6,
            statesum_limit=10,
            max_sweep_n=3,
            random_shadows_per_n=2,
            random_shadow_max_n=5,
        )
    )


def test_verify_config_defaults():
    """Test the documented defaults."""
    config = VerifyConfig()
    assert config.max_exhaustive_n == 5
    assert config.random_samples == 10000
    assert config.statesum_limit == 20
    assert config.seed == 0
    assert config.max_relabel_n == 4
    assert not config.use_spark


@pytest.mark.parametrize(
    "kwargs",
    [
        {"max_exhaustive_n": 0},
        {"max_sweep_n": -1},
        {"statesum_limit": 2.5},
        {"random_samples": -1},
        {"random_shadows_per_n": -3},
        {"max_relabel_n": 0},
        {"seed": 2**63},
    ],
)
def test_verify_config_validation(kwargs):
    """Test out-of-range settings are rejected."""
    with pytest.raises(ValueError):
        VerifyConfig(**kwargs)


def test_verify_config_from_env(monkeypatch):
    """Test the seed comes from WARPKNOT_SEED unless overridden."""
    monkeypatch.setenv("WARPKNOT_SEED", "42")
    assert VerifyConfig.from_env().seed == 42
    assert VerifyConfig.from_env(seed=7).seed == 7
    config = VerifyConfig.from_env(max_sweep_n=None, random_samples=10)
    assert config.max_sweep_n == 6
    assert config.random_samples == 10

    monkeypatch.setenv("WARPKNOT_SEED", "not-a-seed")
    with pytest.raises(ValueError, match="WARPKNOT_SEED"):
        VerifyConfig.from_env()


def test_check_worked_example(config):
    """Test the worked examples pass."""
    result = check_worked_example(config)
    assert result.passed
    assert result.cases == 2


def test_check_state_sums(config):
    """Test exhaustive and random shadows meet the closed form."""
    result = check_state_sums(config)
    assert result.passed
    # 1 + 2 + 5 exhaustive, 2 random at each of n = 4 and 5
    assert result.cases == 8 + 4


def test_check_warping_factorization(config):
    """Test the factorization holds on exhaustive and random diagrams."""
    result = check_warping_factorization(config)
    assert result.passed
    assert result.counterexample is None
    assert result.cases == 2 + 8 + 5 * 8 + 50


def test_check_warping_factorization_catches_broken_x(config):
    """Test a crossing change injected before X is reported."""
    result = check_warping_factorization(
        config, mutate=lambda D: crossing_change(D, 1)
    )
    assert not result.passed
    assert result.counterexample is not None
    assert "W =" in result.details


def test_check_crossing_change(config):
    """Test the identities hold and a span gap of 2 is attained."""
    identities, span_bound = check_crossing_change(config)
    assert identities.passed
    assert span_bound.passed
    assert "gap 2 attained by" in span_bound.details


def test_check_realizability(config):
    """Test the shape test agrees with exhaustive search."""
    assert check_realizability(config).passed


def test_check_warping_degree_bound(config):
    """Test the bound and the even asymmetry, with no findings."""
    bound, asymmetry = check_warping_degree_bound(config)
    assert bound.passed
    assert bound.findings == ()
    assert asymmetry.passed
    assert asymmetry.cases > 0


def test_check_plane_curves(config):
    """Test the curve pipeline and find curves separating the orientations."""
    pipeline, independence = check_plane_curves(config)
    assert pipeline.passed, pipeline.details
    assert independence.passed, independence.details
    assert "None" not in independence.details


def test_check_plane_curves_catches_start_dependence(config, monkeypatch):
    """Test an orientation flipping with the base parity is reported."""
    black_right = verification.orient_odd_black_right

    def parity_dependent(Cb):
        sign = black_right(Cb).sign
        if Cb.base_edge % 2:
            sign = -sign
        return OrientationChoice(sign, "black-right")

    monkeypatch.setattr(verification, "orient_odd_black_right", parity_dependent)
    pipeline, _ = check_plane_curves(config)
    assert not pipeline.passed
    assert "BASE" in pipeline.counterexample
    assert pipeline.details == "black-right orientation changes under shift 1"


def test_run_verification(report):
    """Test every check runs and passes."""
    assert [c.name for c in report.checks] == CHECK_NAMES
    assert report.passed
    assert report.failures() == ()
    assert all(c.cases > 0 for c in report.checks)


def test_report_to_frame(report, tmp_path):
    """Test the tabular report and its CSV round trip."""
    df = report.to_frame()
    assert list(df.columns) == [
        "check",
        "passed",
        "cases",
        "wall_time_s",
        "counterexample",
        "details",
        "findings",
    ]
    assert len(df) == len(CHECK_NAMES)
    path = tmp_path / "verify.csv"
    write_csv_file(df, str(path))
    loaded = pd.read_csv(path, keep_default_na=False)
    assert list(loaded["check"]) == CHECK_NAMES
    assert set(loaded["counterexample"]) == {""}


def test_report_to_dict(report, tmp_path):
    """Test the JSON report carries the config and every check."""
    data = report.to_dict()
    assert data["passed"] is True
    assert data["config"]["max_sweep_n"] == 3
    assert len(data["checks"]) == len(CHECK_NAMES)
    path = tmp_path / "verify.json"
    write_json_file(data, str(path))
    assert json.loads(path.read_text()) == data


def test_report_failures():
    """Test failures are listed in execution order."""
    ok = CheckResult("a", True, 1, 0.0)
    bad = CheckResult("b", False, 2, 0.0, counterexample="O1 U1", details="x")
    report = VerifyReport((ok, bad))
    assert not report.passed
    assert report.failures() == (bad,)
    assert report.to_frame().loc[1, "counterexample"] == "O1 U1"
