"""
Test the property auditor and the property matrix.
"""
import csv
import io
import json

import pytest

from app.auditor import (
    EXPECTED_TABLE,
    EXPECTED_TABLE_SHA256,
    KNOWN_ERRATA,
    audit_all,
    check_property,
    compare_to_expected,
    erratum_note,
    replay_witness,
    witness_confirmed,
)
from app.auditor.export import matrix_to_csv, matrix_to_dict, matrix_to_json
from app.auditor.properties import connective_partials
from app.core.config import settings
from app.core.exceptions import ConfigError
from app.schemas import CommandName, RunConfig, SemanticsId, SemanticsParams
from app.schemas.audit import TABLE_PROPERTIES, PropertyId, Verdict
from app.semantics.registry import get_semantics

AUDIT_TRIALS = 2000


@pytest.fixture(scope="module")
def matrix():
    return audit_all(trials=AUDIT_TRIALS, seed=0)


def test_counterexample_examples():
    test_cases = [
        (SemanticsId.DL2, PropertyId.IDEMPOTENT),
        (SemanticsId.GOEDEL, PropertyId.SHADOW_LIFTING),
        (SemanticsId.STL, PropertyId.ASSOCIATIVE),
        (SemanticsId.LUKASIEWICZ, PropertyId.SCALE_INVARIANT),
    ]
    for s, p in test_cases:
        verdict = check_property(s, p, trials=500, seed=0)
        assert verdict.verdict is Verdict.COUNTEREXAMPLE, (s, p)
        assert witness_confirmed(verdict), (s, p)


def test_dl2_idempotence_witness():
    verdict = check_property(SemanticsId.DL2, PropertyId.IDEMPOTENT, trials=1, seed=0)
    w = verdict.witness
    assert w.lhs == pytest.approx(len(w.values) * w.values[0])
    assert replay_witness(verdict) == pytest.approx(w.violation)


def test_holding_laws():
    test_cases = [
        (SemanticsId.STL, PropertyId.IDEMPOTENT),
        (SemanticsId.PRODUCT, PropertyId.SHADOW_LIFTING),
        (SemanticsId.DL2, PropertyId.SHADOW_LIFTING),
        (SemanticsId.GOEDEL, PropertyId.SCALE_INVARIANT),
        (SemanticsId.DL2, PropertyId.COMMUTATIVE),
    ]
    for s, p in test_cases:
        verdict = check_property(s, p, trials=500, seed=3)
        assert verdict.holds, (s, p, verdict.witness)
        assert verdict.witness is None
        assert not verdict.low_confidence


def test_matrix_matches_expected_table(matrix):
    assert len(matrix.cells) == len(SemanticsId) * len(TABLE_PROPERTIES)
    mismatches = compare_to_expected(matrix)
    assert [(m.semantics, m.property) for m in mismatches] == list(KNOWN_ERRATA)
    assert all(m.erratum for m in mismatches)

    product = matrix.cell(SemanticsId.PRODUCT, PropertyId.MIN_MAX_BOUNDED)
    assert product.verdict is Verdict.COUNTEREXAMPLE
    assert product.witness.lhs < product.witness.rhs


def test_stl_is_not_shadow_lifting():
    verdict = check_property(SemanticsId.STL, PropertyId.SHADOW_LIFTING, trials=500, seed=0)
    assert verdict.verdict is Verdict.COUNTEREXAMPLE
    assert witness_confirmed(verdict)
    assert erratum_note(verdict) == KNOWN_ERRATA[(SemanticsId.STL, PropertyId.SHADOW_LIFTING)]

    stl = get_semantics(SemanticsId.STL)
    params = SemanticsParams()
    test_cases = [
        ([2.0, -2.0], 0, -0.0747),
        ([1.0, 3.0], 1, -0.0908),
    ]
    for values, index, expected in test_cases:
        partial = connective_partials(stl, values, params)[index]
        assert partial == pytest.approx(expected, abs=5e-4), values
    # close to the diagonal every partial is still positive
    assert min(connective_partials(stl, [1.0, 1.02, 0.99], params)) > 0.0


def test_every_witness_replays(matrix):
    for verdict in matrix.cells:
        if verdict.verdict is Verdict.COUNTEREXAMPLE:
            assert witness_confirmed(verdict), (verdict.semantics, verdict.property)


def test_matrix_metadata(matrix):
    assert matrix.table_hash == EXPECTED_TABLE_SHA256
    assert matrix.expected == EXPECTED_TABLE
    assert matrix.trials == AUDIT_TRIALS
    assert any("alpha" in note for note in matrix.notes)


def test_literal_stl_loses_shadow_lifting():
    params = SemanticsParams(stl_literal=True)
    verdict = check_property(SemanticsId.STL, PropertyId.SHADOW_LIFTING, trials=500, seed=0, params=params)
    assert verdict.verdict is Verdict.COUNTEREXAMPLE
    assert witness_confirmed(verdict)

    m = audit_all(trials=200, seed=0, params=params)
    mismatches = compare_to_expected(m)
    literal = [mm for mm in mismatches if mm.semantics is SemanticsId.STL]
    assert [mm.property for mm in literal] == [PropertyId.SHADOW_LIFTING]
    assert not literal[0].erratum
    assert any("printed" in note for note in m.notes)


def test_deterministic_for_fixed_seed():
    first = check_property(SemanticsId.YAGER, PropertyId.SHADOW_LIFTING, trials=300, seed=7)
    second = check_property(SemanticsId.YAGER, PropertyId.SHADOW_LIFTING, trials=300, seed=7)
    assert first == second


def test_workers_give_the_same_matrix():
    sequential = audit_all(trials=100, seed=5, workers=1)
    parallel = audit_all(trials=100, seed=5, workers=2)
    assert sequential.cells == parallel.cells


def test_audit_seed_defaults_to_run_seed():
    assert audit_all(trials=5).seed == settings.SEED == RunConfig(command=CommandName.AUDIT).seed
    assert not hasattr(settings, "AUDIT_SEED")


def test_low_confidence():
    verdict = check_property(SemanticsId.GOEDEL, PropertyId.COMMUTATIVE, trials=10, seed=0)
    assert verdict.holds
    assert verdict.low_confidence
    assert verdict.effective_trials == 10


def test_fuzzy_scale_invariance_stays_in_domain():
    verdict = check_property(SemanticsId.PRODUCT, PropertyId.SCALE_INVARIANT, trials=200, seed=0)
    w = verdict.witness
    assert w.alpha * max(w.values) <= 1.0
    assert verdict.skipped == 0


def test_invalid_arguments():
    with pytest.raises(ConfigError):
        check_property(SemanticsId.DL2, PropertyId.IDEMPOTENT, trials=0, seed=0)
    with pytest.raises(ConfigError):
        check_property(SemanticsId.DL2, PropertyId.WEAK_SMOOTH_PROBE, trials=10, seed=0)
    with pytest.raises(ConfigError):
        check_property(SemanticsId.DL2, PropertyId.IDEMPOTENT, trials=10, seed=-1)
    with pytest.raises(ConfigError):
        check_property(SemanticsId.DL2, PropertyId.IDEMPOTENT, trials=10, seed=0, tol=0.0)
    with pytest.raises(ConfigError):
        replay_witness(check_property(SemanticsId.DL2, PropertyId.COMMUTATIVE, trials=10, seed=0))


def test_export(matrix):
    rows = list(csv.reader(io.StringIO(matrix_to_csv(matrix))))
    assert rows[0] == ["property"] + [s.value for s in SemanticsId]
    assert [r[0] for r in rows[1:]] == [p.value for p in TABLE_PROPERTIES]
    min_max = rows[1 + TABLE_PROPERTIES.index(PropertyId.MIN_MAX_BOUNDED)]
    assert min_max[1 + list(SemanticsId).index(SemanticsId.PRODUCT)] == "no/yes"

    report = json.loads(matrix_to_json(matrix))
    assert report["table_hash"] == EXPECTED_TABLE_SHA256
    assert len(report["cells"]) == 36
    errata = [c for c in report["cells"] if c["erratum"]]
    assert [(c["semantics"], c["property"]) for c in errata] == [
        ("product", "min_max_bounded"),
        ("stl", "shadow_lifting"),
    ]
    assert matrix_to_dict(matrix)["weak_smoothness_probe"] == []


@pytest.mark.slow
def test_full_scale_verdicts_do_not_depend_on_seed():
    first = audit_all(trials=10_000, seed=0)
    second = audit_all(trials=10_000, seed=1, workers=2)
    assert [c.verdict for c in first.cells] == [c.verdict for c in second.cells]
    assert [(m.semantics, m.property) for m in compare_to_expected(first)] == list(KNOWN_ERRATA)
    assert not any(c.low_confidence for c in first.cells)
