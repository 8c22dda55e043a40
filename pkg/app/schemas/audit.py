"""
Audit schemas: property identifiers, verdicts with replayable witnesses, the property matrix.
"""
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from app.schemas import SemanticsId, SemanticsParams


class PropertyId(str, Enum):
    IDEMPOTENT = "idempotent"
    COMMUTATIVE = "commutative"
    ASSOCIATIVE = "associative"
    SHADOW_LIFTING = "shadow_lifting"
    MIN_MAX_BOUNDED = "min_max_bounded"
    SCALE_INVARIANT = "scale_invariant"
    WEAK_SMOOTH_PROBE = "weak_smooth_probe"  # heuristic, never part of the matrix


# Column order of the published property table.
TABLE_PROPERTIES: List[PropertyId] = [
    PropertyId.IDEMPOTENT,
    PropertyId.COMMUTATIVE,
    PropertyId.SHADOW_LIFTING,
    PropertyId.MIN_MAX_BOUNDED,
    PropertyId.SCALE_INVARIANT,
    PropertyId.ASSOCIATIVE,
]


class Verdict(str, Enum):
    HOLDS_ON_TRIALS = "holds_on_trials"
    COUNTEREXAMPLE = "counterexample"


class Witness(BaseModel):
    """
    A counterexample: the conjunct values plus whatever else the law needs.

    lhs/rhs are the two sides of the violated law (for shadow-lifting the
    partial derivative and the tolerance it should exceed).
    """
    values: List[float]
    alpha: Optional[float] = None
    permutation: Optional[List[int]] = None
    index: Optional[int] = None
    lhs: float
    rhs: float
    violation: float
    note: str = ""


class PropertyVerdict(BaseModel):
    semantics: SemanticsId
    property: PropertyId
    verdict: Verdict
    trials: int
    tolerance: float
    witness: Optional[Witness] = None
    params: SemanticsParams = Field(default_factory=SemanticsParams)
    skipped: int = 0
    effective_trials: int = 0
    low_confidence: bool = False

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS_ON_TRIALS


class CellMismatch(BaseModel):
    semantics: SemanticsId
    property: PropertyId
    expected: bool
    observed: bool
    erratum: bool = False
    note: str = ""


class AuditMatrix(BaseModel):
    """All semantics x table-property verdicts next to the published expectations."""
    cells: List[PropertyVerdict]
    expected: Dict[SemanticsId, Dict[PropertyId, bool]]
    trials: int
    seed: int
    params: SemanticsParams = Field(default_factory=SemanticsParams)
    tool_version: str
    table_hash: str
    notes: List[str] = []

    def cell(self, semantics: SemanticsId, prop: PropertyId) -> PropertyVerdict:
        for verdict in self.cells:
            if verdict.semantics is semantics and verdict.property is prop:
                return verdict
        raise KeyError(f"No cell for ({semantics.value}, {prop.value})")


class SmoothnessProbeReport(BaseModel):
    """Outcome of the weak-smoothness probe. A heuristic, not a proof."""
    semantics: SemanticsId
    trials: int
    seed: int
    checked: int
    excluded: int
    passed: int
    pass_rate: float
    max_deviation: float
    heuristic: bool = True
    note: str = "numerical probe at unique-minimum points; not a continuity proof"
