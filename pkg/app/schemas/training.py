"""
Training schemas: augmented-loss configuration and the run report.
"""
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from app.core.config import settings
from app.core.exceptions import ParseError
from app.logic.formula import Formula
from app.logic.parser import parse_formula
from app.schemas import AtomOracle, SemanticsId, SemanticsParams

DEFAULT_CONSTRAINT = "y1 <= 0.9"


class AugmentedLossConfig(BaseModel):
    """alpha * cross-entropy + beta * constraint loss, plus the run knobs."""
    model_config = ConfigDict(frozen=True)

    alpha: float = Field(default=settings.DEFAULT_ALPHA, ge=0, le=1)
    beta: float = Field(default=settings.DEFAULT_BETA, ge=0, le=1)
    semantics: SemanticsId = SemanticsId.DL2
    params: SemanticsParams = Field(default_factory=SemanticsParams)
    oracle: Optional[AtomOracle] = None
    constraint: str = DEFAULT_CONSTRAINT
    lr: float = Field(default=settings.LEARNING_RATE, gt=0, allow_inf_nan=False)
    epochs: int = Field(default=settings.EPOCHS, ge=1)
    seed: int = settings.SEED
    dataset_size: int = Field(default=settings.DATASET_SIZE, ge=10)
    hidden_width: int = Field(default=settings.HIDDEN_WIDTH, ge=1)

    @field_validator("constraint")
    @classmethod
    def _constraint_parses(cls, v: str) -> str:
        try:
            parse_formula(v)
        except ParseError as e:
            raise ValueError(f"constraint does not parse: {e}") from e
        return v

    @property
    def formula(self) -> Formula:
        return parse_formula(self.constraint)


class EpochRecord(BaseModel):
    epoch: int
    ce_loss: float
    constraint_loss: float
    augmented_loss: float
    accuracy: float
    satisfaction_rate: float


class TrainReport(BaseModel):
    """
    Per-epoch records describe the weights each update starts from;
    `trained` describes the weights the run returns.
    """
    config: AugmentedLossConfig
    epochs: List[EpochRecord] = []
    trained: Optional[EpochRecord] = None
    baseline_satisfaction: float = 0.0
    weights_checksum: str = ""
    diverged: bool = False
    tool_version: str = ""

    @property
    def final(self) -> Optional[EpochRecord]:
        if self.trained is not None:
            return self.trained
        return self.epochs[-1] if self.epochs else None
