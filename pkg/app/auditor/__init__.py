"""
Property auditor: randomized law checks, the property matrix, the weak-smoothness probe.
"""
from .matrix import (
    EXPECTED_TABLE,
    EXPECTED_TABLE_SHA256,
    KNOWN_ERRATA,
    audit_all,
    compare_to_expected,
    erratum_note,
)
from .properties import check_property, replay_witness, witness_confirmed
from .smoothness import weak_smoothness_probe

__all__ = [
    "KNOWN_ERRATA",
    "EXPECTED_TABLE",
    "EXPECTED_TABLE_SHA256",
    "audit_all",
    "check_property",
    "compare_to_expected",
    "erratum_note",
    "replay_witness",
    "weak_smoothness_probe",
    "witness_confirmed",
]
