"""
Cross-entropy and the constraint loss over network inputs and outputs.

Constraints see the inputs as x1..xn and the softmax outputs as y1..ym.
"""
from typing import Dict, Optional, Tuple

import numpy as np

from app.core.exceptions import ConfigError
from app.schemas import SemanticsId
from app.schemas.training import AugmentedLossConfig
from app.semantics.compiler import CompiledLoss, compile_loss, eval_loss
from app.trainer.data import Dataset
from app.trainer.network import Network

LOG_FLOOR = 1e-12


def cross_entropy(probs: np.ndarray, y: np.ndarray) -> float:
    """-sum y_i log p_i for one prediction, with p clamped at 1e-12."""
    probs = np.asarray(probs, dtype=float)
    y = np.asarray(y, dtype=float)
    if probs.shape != y.shape:
        raise ConfigError(f"Dimension mismatch: probs {probs.shape} vs labels {y.shape}")
    return float(-(y * np.log(np.maximum(probs, LOG_FLOOR))).sum())


def batch_cross_entropy(probs: np.ndarray, y: np.ndarray) -> float:
    """Mean cross-entropy over the rows of a batch."""
    if probs.shape != y.shape:
        raise ConfigError(f"Dimension mismatch: probs {probs.shape} vs labels {y.shape}")
    return float(-(y * np.log(np.maximum(probs, LOG_FLOOR))).sum(axis=1).mean())


def input_names(n: int) -> Tuple[str, ...]:
    return tuple(f"x{i + 1}" for i in range(n))


def output_names(m: int) -> Tuple[str, ...]:
    return tuple(f"y{j + 1}" for j in range(m))


def point_env(x_row: np.ndarray, p_row: np.ndarray) -> Dict[str, float]:
    env = {name: float(v) for name, v in zip(input_names(len(x_row)), x_row)}
    env.update({name: float(v) for name, v in zip(output_names(len(p_row)), p_row)})
    return env


def penalty_transform(semantics: SemanticsId) -> Tuple[float, float]:
    """
    (offset, sign) turning a semantics value v into a quantity to minimise,
    offset + sign * v: DL2 is already a loss, fuzzy truth becomes 1 - v and
    STL robustness is negated.
    """
    if semantics is SemanticsId.DL2:
        return 0.0, 1.0
    if semantics.is_fuzzy:
        return 1.0, -1.0
    return 0.0, -1.0


def compile_constraint(cfg: AugmentedLossConfig) -> CompiledLoss:
    return compile_loss(cfg.formula, cfg.semantics, cfg.params, cfg.oracle)


def constraint_loss(
    net: Network,
    batch: Dataset,
    cfg: AugmentedLossConfig,
    loss: Optional[CompiledLoss] = None,
) -> float:
    """Batch mean of the constraint penalty at each point."""
    loss = loss or compile_constraint(cfg)
    offset, sign = penalty_transform(cfg.semantics)
    probs = net.predict(batch.x)
    values = [offset + sign * eval_loss(loss, point_env(x, p)) for x, p in zip(batch.x, probs)]
    return float(np.mean(values))
