"""
Test the weak-smoothness heuristic.
"""
import pytest

from app.auditor import weak_smoothness_probe
from app.core.exceptions import ConfigError
from app.schemas import SemanticsId

PROBE_TRIALS = 300


@pytest.mark.parametrize("s", [SemanticsId.DL2, SemanticsId.GOEDEL, SemanticsId.PRODUCT])
def test_smooth_at_unique_minimum(s):
    report = weak_smoothness_probe(s, PROBE_TRIALS, seed=0)
    assert report.checked > 0
    assert report.pass_rate == 1.0
    assert report.max_deviation < 1e-6


def test_stl_smoothness():
    report = weak_smoothness_probe(SemanticsId.STL, PROBE_TRIALS, seed=0)
    assert report.heuristic
    assert report.checked + report.excluded == PROBE_TRIALS
    assert report.pass_rate >= 0.9


def test_smoothness_is_deterministic():
    first = weak_smoothness_probe(SemanticsId.YAGER, 100, seed=11)
    second = weak_smoothness_probe(SemanticsId.YAGER, 100, seed=11)
    assert first == second


def test_smoothness_rejects_bad_trials():
    with pytest.raises(ConfigError):
        weak_smoothness_probe(SemanticsId.DL2, 0, seed=0)
