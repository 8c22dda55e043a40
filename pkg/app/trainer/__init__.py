"""
Constraint-augmented training of a small MLP.
"""
from .data import Dataset, make_dataset
from .losses import constraint_loss, cross_entropy
from .network import Network
from .train import augmented_loss_and_grads, satisfaction_rate, train

__all__ = [
    "Dataset",
    "Network",
    "augmented_loss_and_grads",
    "constraint_loss",
    "cross_entropy",
    "make_dataset",
    "satisfaction_rate",
    "train",
]
