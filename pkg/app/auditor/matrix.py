"""
The full property matrix and its comparison with the published table.
"""
import hashlib
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Tuple

from app import __version__
from app.auditor.properties import check_property
from app.core.config import settings
from app.schemas import SemanticsId, SemanticsParams
from app.schemas.audit import TABLE_PROPERTIES, AuditMatrix, CellMismatch, PropertyId, PropertyVerdict

logger = logging.getLogger(__name__)

_P = PropertyId

# Published expectations, one row per semantics in table column order.
EXPECTED_TABLE: Dict[SemanticsId, Dict[PropertyId, bool]] = {
    SemanticsId.DL2: {
        _P.IDEMPOTENT: False, _P.COMMUTATIVE: True, _P.SHADOW_LIFTING: True,
        _P.MIN_MAX_BOUNDED: False, _P.SCALE_INVARIANT: True, _P.ASSOCIATIVE: True,
    },
    SemanticsId.GOEDEL: {
        _P.IDEMPOTENT: True, _P.COMMUTATIVE: True, _P.SHADOW_LIFTING: False,
        _P.MIN_MAX_BOUNDED: True, _P.SCALE_INVARIANT: True, _P.ASSOCIATIVE: True,
    },
    SemanticsId.LUKASIEWICZ: {
        _P.IDEMPOTENT: False, _P.COMMUTATIVE: True, _P.SHADOW_LIFTING: False,
        _P.MIN_MAX_BOUNDED: False, _P.SCALE_INVARIANT: False, _P.ASSOCIATIVE: True,
    },
    SemanticsId.YAGER: {
        _P.IDEMPOTENT: False, _P.COMMUTATIVE: True, _P.SHADOW_LIFTING: False,
        _P.MIN_MAX_BOUNDED: False, _P.SCALE_INVARIANT: False, _P.ASSOCIATIVE: True,
    },
    SemanticsId.PRODUCT: {
        _P.IDEMPOTENT: False, _P.COMMUTATIVE: True, _P.SHADOW_LIFTING: True,
        _P.MIN_MAX_BOUNDED: True, _P.SCALE_INVARIANT: False, _P.ASSOCIATIVE: True,
    },
    SemanticsId.STL: {
        _P.IDEMPOTENT: True, _P.COMMUTATIVE: True, _P.SHADOW_LIFTING: True,
        _P.MIN_MAX_BOUNDED: True, _P.SCALE_INVARIANT: True, _P.ASSOCIATIVE: False,
    },
}


def _table_hash(table: Dict[SemanticsId, Dict[PropertyId, bool]]) -> str:
    canonical = {s.value: {p.value: v for p, v in row.items()} for s, row in table.items()}
    payload = json.dumps(canonical, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


EXPECTED_TABLE_SHA256 = _table_hash(EXPECTED_TABLE)

# Cells where the table contradicts the operator's own definition.
KNOWN_ERRATA: Dict[Tuple[SemanticsId, PropertyId], str] = {
    (SemanticsId.PRODUCT, PropertyId.MIN_MAX_BOUNDED): (
        "the product t-norm is not min-max bounded: 0.5 * 0.5 = 0.25 < min(0.5, 0.5)"
    ),
    (SemanticsId.STL, PropertyId.SHADOW_LIFTING): (
        "the smooth stl conjunction is not shadow-lifting away from the diagonal: at (2, -2) the "
        "partial w.r.t. the positive conjunct is about -0.075, and at (1, 3) the partial w.r.t. 3 "
        "is about -0.091"
    ),
}

# The printed positive branch loses shadow-lifting for a different reason
# (zero partials), which the stl erratum above does not cover.
LITERAL_STL_UNDOCUMENTED = frozenset({(SemanticsId.STL, PropertyId.SHADOW_LIFTING)})

MATRIX_NOTES: List[str] = [
    "scale invariance is audited for alpha in (0, 4]; the published definition reads 'alpha <= 0', "
    "which contradicts the table itself (min turns into max under negative scaling)",
    "fuzzy scale invariance only accepts alpha with alpha * max(values) <= 1",
    "shadow-lifting samples uniformly over each range with every |value| >= 0.05",
    "the weak-smoothness probe is a heuristic and is not part of the matrix",
]


def _audit_cell(args: Tuple[SemanticsId, PropertyId, int, int, Optional[float], SemanticsParams]) -> PropertyVerdict:
    s, p, trials, seed, tol, params = args
    return check_property(s, p, trials, seed, tol, params)


def audit_all(
    trials: int = settings.AUDIT_TRIALS,
    seed: int = settings.SEED,
    tol: Optional[float] = None,
    workers: int = 1,
    params: Optional[SemanticsParams] = None,
) -> AuditMatrix:
    """
    Check every (semantics, table property) cell.

    Each cell has its own seeded stream, so a process pool gives the same
    matrix as the sequential run.
    """
    params = params or SemanticsParams()
    jobs = [(s, p, trials, seed, tol, params) for s in SemanticsId for p in TABLE_PROPERTIES]
    logger.info(f"Auditing {len(jobs)} cells with {trials} trials each (seed={seed}, workers={workers})")

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            cells = list(pool.map(_audit_cell, jobs))
    else:
        cells = [_audit_cell(job) for job in jobs]

    notes = list(MATRIX_NOTES)
    if params.stl_literal:
        notes.append("stl uses the positive branch exactly as printed (A_min in the numerator)")
    return AuditMatrix(
        cells=cells,
        expected=EXPECTED_TABLE,
        trials=trials,
        seed=seed,
        params=params,
        tool_version=__version__,
        table_hash=EXPECTED_TABLE_SHA256,
        notes=notes,
    )


def erratum_note(verdict: PropertyVerdict) -> Optional[str]:
    """The documented explanation for this cell's mismatch, if there is one."""
    key = (verdict.semantics, verdict.property)
    if verdict.params.stl_literal and key in LITERAL_STL_UNDOCUMENTED:
        return None
    return KNOWN_ERRATA.get(key)


def compare_to_expected(m: AuditMatrix) -> List[CellMismatch]:
    """Cells whose verdict disagrees with the published table."""
    mismatches: List[CellMismatch] = []
    for verdict in m.cells:
        expected = m.expected[verdict.semantics][verdict.property]
        if verdict.holds == expected:
            continue
        note = erratum_note(verdict)
        mismatches.append(
            CellMismatch(
                semantics=verdict.semantics,
                property=verdict.property,
                expected=expected,
                observed=verdict.holds,
                erratum=note is not None,
                note=note or "",
            )
        )
    for mismatch in mismatches:
        level = logging.INFO if mismatch.erratum else logging.WARNING
        logger.log(level, f"Mismatch at ({mismatch.semantics.value}, {mismatch.property.value}): "
                          f"expected {mismatch.expected}, observed {mismatch.observed}")
    return mismatches
