"""
Full-batch gradient descent on alpha * cross-entropy + beta * constraint loss.

The constraint term is differentiated w.r.t. the network outputs by the
forward-mode engine, then chained through softmax and the MLP by backprop.
"""
import logging
import math
from dataclasses import dataclass
from typing import Dict, NoReturn, Optional, Tuple

import numpy as np

from app import __version__
from app.autodiff.gradient import grad
from app.core.exceptions import ArithmeticFault, DivergenceError
from app.logic.formula import Formula
from app.logic.interpret import interpret_bool
from app.schemas.training import AugmentedLossConfig, EpochRecord, TrainReport
from app.semantics.compiler import CompiledLoss
from app.trainer.data import Dataset, make_dataset
from app.trainer.losses import (
    batch_cross_entropy,
    compile_constraint,
    output_names,
    penalty_transform,
    point_env,
)
from app.trainer.network import Network, softmax_backward

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LossValues:
    ce: float
    constraint: float
    augmented: float
    probs: np.ndarray


def augmented_loss_and_grads(
    net: Network,
    batch: Dataset,
    cfg: AugmentedLossConfig,
    loss: Optional[CompiledLoss] = None,
) -> Tuple[LossValues, Dict[str, np.ndarray]]:
    """Loss components on the batch and the weight gradients of the augmented loss."""
    loss = loss or compile_constraint(cfg)
    offset, sign = penalty_transform(cfg.semantics)
    n = len(batch)

    probs, cache = net.forward(batch.x)
    ce = batch_cross_entropy(probs, batch.y)

    y_names = output_names(batch.n_outputs)
    wrt = [name for name in y_names if name in loss.variables]
    upstream = np.zeros_like(probs)
    total = 0.0
    for i in range(n):
        value, g = grad(loss, point_env(batch.x[i], probs[i]), wrt=wrt)
        total += offset + sign * value
        for j, name in enumerate(y_names):
            upstream[i, j] = sign * g.get(name, 0.0)
    constraint = total / n

    dz = cfg.alpha * (probs - batch.y) / n + cfg.beta * softmax_backward(probs, upstream) / n
    values = LossValues(
        ce=ce,
        constraint=constraint,
        augmented=cfg.alpha * ce + cfg.beta * constraint,
        probs=probs,
    )
    return values, net.backward(cache, dz)


def accuracy(probs: np.ndarray, y: np.ndarray) -> float:
    return float(np.mean(probs.argmax(axis=1) == y.argmax(axis=1)))


def _satisfied_fraction(probs: np.ndarray, data: Dataset, constraint: Formula) -> float:
    hits = sum(interpret_bool(constraint, point_env(x, p)) for x, p in zip(data.x, probs))
    return hits / len(data)


def satisfaction_rate(net: Network, data: Dataset, constraint: Formula) -> float:
    """Fraction of points where the constraint holds classically."""
    return _satisfied_fraction(net.predict(data.x), data, constraint)


def _evaluate(
    net: Network,
    data: Dataset,
    cfg: AugmentedLossConfig,
    loss: CompiledLoss,
    report: TrainReport,
    epoch: int,
) -> Tuple[EpochRecord, Dict[str, np.ndarray]]:
    try:
        values, grads = augmented_loss_and_grads(net, data, cfg, loss)
    except ArithmeticFault as e:
        _diverge(report, net, f"Arithmetic fault at epoch {epoch}: {e}")
    if not math.isfinite(values.augmented):
        _diverge(report, net, f"Non-finite loss at epoch {epoch}")

    record = EpochRecord(
        epoch=epoch,
        ce_loss=values.ce,
        constraint_loss=values.constraint,
        augmented_loss=values.augmented,
        accuracy=accuracy(values.probs, data.y),
        satisfaction_rate=_satisfied_fraction(values.probs, data, cfg.formula),
    )
    return record, grads


def train(cfg: AugmentedLossConfig, data: Optional[Dataset] = None) -> TrainReport:
    """
    Train from a seeded initialisation and record per-epoch metrics.

    Each epoch record describes the weights that epoch's update starts from;
    `report.trained` evaluates the weights after the last update. A
    non-finite loss or weight raises DivergenceError carrying the report so far.
    """
    data = data or make_dataset(cfg.seed, cfg.dataset_size)
    net = Network.init(seed=cfg.seed, n_inputs=data.n_inputs, hidden=cfg.hidden_width, n_outputs=data.n_outputs)
    loss = compile_constraint(cfg)

    report = TrainReport(
        config=cfg,
        baseline_satisfaction=satisfaction_rate(net, data, cfg.formula),
        tool_version=__version__,
    )
    logger.info(
        f"Training {cfg.epochs} epochs on {len(data)} points: semantics={cfg.semantics.value}, "
        f"alpha={cfg.alpha}, beta={cfg.beta}, baseline satisfaction={report.baseline_satisfaction:.3f}"
    )

    for epoch in range(cfg.epochs):
        record, grads = _evaluate(net, data, cfg, loss, report, epoch)
        report.epochs.append(record)
        logger.debug(f"Epoch {epoch}: {record.model_dump()}")

        net.step(grads, cfg.lr)
        if not net.is_finite():
            _diverge(report, net, f"Non-finite weights after epoch {epoch}")

    report.trained, _ = _evaluate(net, data, cfg, loss, report, cfg.epochs)
    report.weights_checksum = net.checksum()
    final = report.final
    logger.info(f"Finished: accuracy={final.accuracy:.3f}, satisfaction={final.satisfaction_rate:.3f}")
    return report


def _diverge(report: TrainReport, net: Network, message: str) -> NoReturn:
    report.diverged = True
    report.weights_checksum = net.checksum()
    logger.error(message)
    raise DivergenceError(message, report=report)
