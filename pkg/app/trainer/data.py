"""
Synthetic two-class dataset.
"""
from dataclasses import dataclass

import numpy as np

from app.core.config import settings
from app.core.exceptions import ConfigError

MIN_COUNT = 10
BLOB_CENTER = 1.5
BLOB_STD = 1.0


@dataclass(frozen=True, eq=False)
class Dataset:
    """Inputs x (N x n) with one-hot labels y (N x m)."""
    x: np.ndarray
    y: np.ndarray

    def __post_init__(self) -> None:
        if self.x.ndim != 2 or self.y.ndim != 2 or len(self.x) != len(self.y):
            raise ConfigError(f"Dataset shapes do not line up: x{self.x.shape}, y{self.y.shape}")
        if not np.all((self.y == 0.0) | (self.y == 1.0)) or not np.all(self.y.sum(axis=1) == 1.0):
            raise ConfigError("Labels must be one-hot")

    def __len__(self) -> int:
        return len(self.x)

    @property
    def n_inputs(self) -> int:
        return self.x.shape[1]

    @property
    def n_outputs(self) -> int:
        return self.y.shape[1]


def make_dataset(seed: int = settings.SEED, count: int = settings.DATASET_SIZE) -> Dataset:
    """
    Two Gaussian blobs in the plane, centred at -(1.5, 1.5) (class 1) and
    +(1.5, 1.5) (class 2), with exactly balanced labels.
    """
    if count < MIN_COUNT:
        raise ConfigError(f"Dataset needs at least {MIN_COUNT} points, got {count}")

    rng = np.random.default_rng(seed)
    first = count // 2
    labels = np.concatenate([np.zeros(first, dtype=int), np.ones(count - first, dtype=int)])
    centers = np.where(labels[:, None] == 0, -BLOB_CENTER, BLOB_CENTER)
    x = centers + rng.normal(0.0, BLOB_STD, size=(count, 2))

    order = rng.permutation(count)
    x = x[order]
    y = np.eye(2)[labels[order]]
    return Dataset(x=x, y=y)
