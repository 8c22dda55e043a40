"""
Pydantic schemas and enums shared across the compiler, auditor, trainer and CLI.
"""
import math
from enum import Enum
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field

from app.core.config import settings


class SemanticsId(str, Enum):
    DL2 = "dl2"
    GOEDEL = "goedel"
    LUKASIEWICZ = "lukasiewicz"
    YAGER = "yager"
    PRODUCT = "product"
    STL = "stl"

    @property
    def is_fuzzy(self) -> bool:
        return self in FUZZY_SEMANTICS


FUZZY_SEMANTICS = frozenset(
    {SemanticsId.GOEDEL, SemanticsId.LUKASIEWICZ, SemanticsId.YAGER, SemanticsId.PRODUCT}
)


class OracleMode(str, Enum):
    CRISP = "crisp"
    GRADED = "graded"
    ROBUSTNESS = "robustness"


class TrueRegion(str, Enum):
    EQUALS = "equals"
    GREATER_THAN = "greater_than"


class StlBranch(str, Enum):
    NEG = "neg"
    POS = "pos"
    ZERO = "zero"


class SemanticsParams(BaseModel):
    """Constants of the translations: DL2 xi, Yager p, STL nu."""
    model_config = ConfigDict(frozen=True)

    xi: float = Field(default=settings.DEFAULT_XI, gt=0, allow_inf_nan=False)
    p: float = Field(default=settings.DEFAULT_P, ge=1, allow_inf_nan=False)
    nu: float = Field(default=settings.DEFAULT_NU, gt=0, allow_inf_nan=False)
    # Use the positive STL branch exactly as printed (A_min in the numerator).
    stl_literal: bool = False


class AtomOracle(BaseModel):
    """Maps atoms to the semantics' domain."""
    model_config = ConfigDict(frozen=True)

    mode: OracleMode = OracleMode.CRISP
    scale: float = Field(default=settings.DEFAULT_ORACLE_SCALE, gt=0, allow_inf_nan=False)


class DomainSpec(BaseModel):
    """Interval of a semantics and the part of it that means true."""
    model_config = ConfigDict(frozen=True)

    lo: float
    hi: float
    true_region: TrueRegion
    true_value: float

    def contains(self, v: float) -> bool:
        return self.lo <= v <= self.hi and not math.isnan(v)

    def is_true(self, v: float) -> bool:
        if self.true_region is TrueRegion.EQUALS:
            return v == self.true_value
        return v > self.true_value


class CommandResult(BaseModel):
    """Standard result format for all CLI commands."""
    success: bool
    exit_code: int = 0
    data: Optional[Dict[str, Any]] = None
    text: str = ""
    error: Optional[str] = None


class CommandName(str, Enum):
    EVAL = "eval"
    GRAD = "grad"
    AUDIT = "audit"
    TRAIN = "train"


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


class RunConfig(BaseModel):
    """Resolved command-line run, validated before dispatch."""
    model_config = ConfigDict(frozen=True)

    command: CommandName
    semantics: SemanticsId = SemanticsId.DL2
    params: SemanticsParams = Field(default_factory=SemanticsParams)
    oracle: Optional[OracleMode] = None
    scale: float = Field(default=settings.DEFAULT_ORACLE_SCALE, gt=0, allow_inf_nan=False)
    formula_path: Optional[str] = None
    expr: Optional[str] = None
    env_path: Optional[str] = None
    config_path: Optional[str] = None
    seed: int = Field(default=settings.SEED, ge=0)
    trials: int = Field(default=settings.AUDIT_TRIALS, ge=1)
    tol: Optional[float] = Field(default=None, gt=0)
    out: OutputFormat = OutputFormat.TEXT
    workers: int = Field(default=1, ge=1)
    report_dir: str = settings.REPORT_DIR
    fd: bool = False
    trace: bool = False
