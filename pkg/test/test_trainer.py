"""
Test the dataset, the network and constraint-augmented training.
"""
import csv
import io
import math

import numpy as np
import pytest
from pydantic import ValidationError

from app.autodiff.gradient import kink_margin
from app.core.exceptions import ConfigError, DivergenceError
from app.schemas import SemanticsId
from app.schemas.training import AugmentedLossConfig
from app.trainer import Dataset, Network, make_dataset, train
from app.trainer.export import CSV_COLUMNS, report_to_csv, report_to_json
from app.trainer.losses import (
    batch_cross_entropy,
    compile_constraint,
    constraint_loss,
    cross_entropy,
    penalty_transform,
    point_env,
)
from app.trainer.train import augmented_loss_and_grads, satisfaction_rate

FD_STEP = 1e-6


def _constant_net(y1: float) -> Network:
    """A network that outputs (y1, 1 - y1) for every input."""
    return Network(
        W1=np.zeros((2, 2)),
        b1=np.zeros(2),
        W2=np.zeros((2, 2)),
        b2=np.log(np.array([y1, 1.0 - y1])),
    )


def test_make_dataset():
    data = make_dataset(seed=0, count=1000)
    assert data.x.shape == (1000, 2)
    assert data.y.shape == (1000, 2)
    assert data.y.sum(axis=0).tolist() == [500.0, 500.0]

    first = data.x[data.y[:, 0] == 1.0].mean(axis=0)
    assert np.all(first < -1.0)

    again = make_dataset(seed=0, count=1000)
    assert np.array_equal(data.x, again.x)
    assert np.array_equal(data.y, again.y)
    assert not np.array_equal(data.x, make_dataset(seed=1, count=1000).x)

    with pytest.raises(ConfigError):
        make_dataset(seed=0, count=5)


def test_dataset_validation():
    with pytest.raises(ConfigError):
        Dataset(x=np.zeros((3, 2)), y=np.zeros((2, 2)))
    with pytest.raises(ConfigError):
        Dataset(x=np.zeros((2, 2)), y=np.array([[0.5, 0.5], [1.0, 0.0]]))


def test_cross_entropy():
    assert cross_entropy([0.5, 0.5], [1.0, 0.0]) == pytest.approx(math.log(2.0))
    assert cross_entropy([0.0, 1.0], [1.0, 0.0]) == pytest.approx(-math.log(1e-12))
    assert batch_cross_entropy(np.array([[0.5, 0.5], [1.0, 0.0]]), np.eye(2)) == pytest.approx(math.log(2.0) / 2)
    with pytest.raises(ConfigError):
        cross_entropy([0.5, 0.5], [1.0, 0.0, 0.0])


@pytest.mark.parametrize("s", [SemanticsId.DL2, SemanticsId.GOEDEL, SemanticsId.STL])
def test_constraint_loss_of_constant_output(s):
    data = make_dataset(seed=0, count=20)
    cfg = AugmentedLossConfig(semantics=s, constraint="y1 <= 0.9")
    assert constraint_loss(_constant_net(0.95), data, cfg) == pytest.approx(0.05)
    assert satisfaction_rate(_constant_net(0.95), data, cfg.formula) == 0.0
    assert satisfaction_rate(_constant_net(0.5), data, cfg.formula) == 1.0


def test_penalty_transform():
    assert penalty_transform(SemanticsId.DL2) == (0.0, 1.0)
    assert penalty_transform(SemanticsId.YAGER) == (1.0, -1.0)
    assert penalty_transform(SemanticsId.STL) == (0.0, -1.0)


def _kink_free_net(data: Dataset, cfg: AugmentedLossConfig) -> Network:
    loss = compile_constraint(cfg)
    for seed in range(50):
        net = Network.init(seed=seed, n_inputs=2, hidden=4, n_outputs=2)
        probs, (_, z1, _, _) = net.forward(data.x)
        if np.min(np.abs(z1)) < 1e-3:
            continue
        if min(kink_margin(loss, point_env(x, p)) for x, p in zip(data.x, probs)) < 1e-3:
            continue
        return net
    raise AssertionError("no kink-free initialisation found")


@pytest.mark.parametrize(
    "s, constraint",
    [
        (SemanticsId.DL2, "y1 <= 0.5"),
        (SemanticsId.GOEDEL, "and(y1 <= 0, y2 <= 0)"),
        (SemanticsId.LUKASIEWICZ, "and(y1 <= 0, y2 <= 0.5)"),
        (SemanticsId.YAGER, "and(y1 <= 0, y2 <= 0.5)"),
        (SemanticsId.PRODUCT, "and(y1 <= 0.7, y2 <= 0.7)"),
        (SemanticsId.STL, "and(y1 <= 0.9, y2 <= 0.8)"),
    ],
)
def test_backprop_matches_finite_differences(s, constraint):
    data = make_dataset(seed=0, count=20)
    cfg = AugmentedLossConfig(semantics=s, constraint=constraint, alpha=0.5, beta=0.5)
    net = _kink_free_net(data, cfg)
    _, grads = augmented_loss_and_grads(net, data, cfg)

    for name, value in net.params().items():
        for idx in np.ndindex(value.shape):
            up, down = net.copy(), net.copy()
            getattr(up, name)[idx] += FD_STEP
            getattr(down, name)[idx] -= FD_STEP
            f_up = augmented_loss_and_grads(up, data, cfg)[0].augmented
            f_down = augmented_loss_and_grads(down, data, cfg)[0].augmented
            fd = (f_up - f_down) / (2.0 * FD_STEP)
            g = grads[name][idx]
            assert abs(g - fd) <= 1e-6 * (1.0 + abs(g)), (name, idx, g, fd)


def test_training_is_reproducible():
    cfg = AugmentedLossConfig(epochs=5, dataset_size=100, seed=3)
    first = train(cfg)
    second = train(cfg)
    assert first.weights_checksum == second.weights_checksum
    assert first.epochs == second.epochs
    assert [r.epoch for r in first.epochs] == list(range(5))
    assert first.final.augmented_loss == pytest.approx(
        cfg.alpha * first.final.ce_loss + cfg.beta * first.final.constraint_loss
    )
    assert train(cfg.model_copy(update={"seed": 4})).weights_checksum != first.weights_checksum


def test_trained_record_describes_returned_weights():
    cfg = AugmentedLossConfig(epochs=1, dataset_size=50, hidden_width=4)
    one = train(cfg)
    two = train(cfg.model_copy(update={"epochs": 2}))
    assert one.final is one.trained
    assert one.trained.epoch == 1
    assert one.trained == two.epochs[1]
    assert len(one.epochs) == 1


def test_constraint_alone_improves_satisfaction():
    report = train(AugmentedLossConfig(alpha=0.0, beta=0.5, dataset_size=200))
    assert report.final.constraint_loss < report.epochs[0].constraint_loss
    assert report.final.satisfaction_rate >= report.baseline_satisfaction


def test_constraint_loss_decreases_with_beta():
    finals = [
        train(AugmentedLossConfig(alpha=0.5, beta=beta, dataset_size=200, seed=0)).final.constraint_loss
        for beta in (0.0, 0.25, 0.5, 1.0)
    ]
    assert all(later <= earlier for earlier, later in zip(finals, finals[1:]))


def test_paired_runs():
    baseline = train(AugmentedLossConfig(alpha=0.5, beta=0.0, seed=0))
    augmented = train(AugmentedLossConfig(alpha=0.5, beta=0.5, seed=0))
    assert baseline.baseline_satisfaction == augmented.baseline_satisfaction
    assert augmented.final.satisfaction_rate >= baseline.final.satisfaction_rate
    assert augmented.final.constraint_loss <= baseline.final.constraint_loss


def test_divergence_keeps_partial_report():
    data = Dataset(x=np.full((10, 2), np.nan), y=np.tile([1.0, 0.0], (10, 1)))
    with pytest.raises(DivergenceError) as excinfo:
        train(AugmentedLossConfig(epochs=3, hidden_width=4), data=data)
    assert excinfo.value.exit_code == 4
    assert excinfo.value.report.diverged
    assert excinfo.value.report.weights_checksum


def test_config_validation():
    with pytest.raises(ValidationError):
        AugmentedLossConfig(alpha=1.5)
    with pytest.raises(ValidationError):
        AugmentedLossConfig(constraint="y1 < 0.9")
    with pytest.raises(ValidationError):
        AugmentedLossConfig(lr=0.0)


def test_report_export():
    report = train(AugmentedLossConfig(epochs=2, dataset_size=20))
    rows = list(csv.DictReader(io.StringIO(report_to_csv(report))))
    assert list(rows[0]) == CSV_COLUMNS
    assert len(rows) == 2
    assert '"weights_checksum"' in report_to_json(report)
