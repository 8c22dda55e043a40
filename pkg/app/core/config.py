"""
Application configuration using Pydantic settings.
"""
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="DLC_",
        case_sensitive=True,
        extra="ignore",
    )

    # Semantics parameters
    DEFAULT_XI: float = Field(default=1.0, gt=0)
    DEFAULT_P: float = Field(default=2.0, ge=1)
    DEFAULT_NU: float = Field(default=1.0, gt=0)
    DEFAULT_ORACLE_SCALE: float = Field(default=1.0, gt=0)

    # Auditor
    AUDIT_TRIALS: int = Field(default=10_000, ge=1)
    SEED: int = Field(default=0)
    ALGEBRAIC_TOL: float = Field(default=1e-9, gt=0)
    GRADIENT_TOL: float = Field(default=1e-6, gt=0)
    FD_STEP: float = Field(default=1e-5, gt=0)

    # Trainer
    LEARNING_RATE: float = Field(default=0.1, gt=0)
    EPOCHS: int = Field(default=200, ge=1)
    HIDDEN_WIDTH: int = Field(default=16, ge=1)
    DATASET_SIZE: int = Field(default=1000, ge=10)
    DEFAULT_ALPHA: float = Field(default=0.5, ge=0, le=1)
    DEFAULT_BETA: float = Field(default=0.5, ge=0, le=1)

    # Reports
    REPORT_DIR: str = Field(default="reports")

    # Logging
    LOG_LEVEL: str = Field(default="INFO")
    LOG_FORMAT: str = Field(default="text")


# Create settings instance
settings = Settings()
