"""
Two-layer perceptron with ReLU hidden units and a softmax output, trained by hand-written backprop.
"""
import hashlib
from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from app.core.config import settings

Cache = Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]
PARAM_NAMES = ("W1", "b1", "W2", "b2")


def relu(z: np.ndarray) -> np.ndarray:
    return np.maximum(z, 0.0)


def softmax(z: np.ndarray) -> np.ndarray:
    shifted = z - z.max(axis=1, keepdims=True)
    e = np.exp(shifted)
    return e / e.sum(axis=1, keepdims=True)


def softmax_backward(probs: np.ndarray, upstream: np.ndarray) -> np.ndarray:
    """Gradient w.r.t. the logits given the gradient w.r.t. the probabilities, row by row."""
    inner = (upstream * probs).sum(axis=1, keepdims=True)
    return probs * (upstream - inner)


@dataclass(eq=False)
class Network:
    W1: np.ndarray
    b1: np.ndarray
    W2: np.ndarray
    b2: np.ndarray

    @classmethod
    def init(
        cls,
        seed: int = settings.SEED,
        n_inputs: int = 2,
        hidden: int = settings.HIDDEN_WIDTH,
        n_outputs: int = 2,
    ) -> "Network":
        """He-initialised weights, zero biases."""
        rng = np.random.default_rng(seed)
        return cls(
            W1=rng.normal(0.0, np.sqrt(2.0 / n_inputs), size=(n_inputs, hidden)),
            b1=np.zeros(hidden),
            W2=rng.normal(0.0, np.sqrt(2.0 / hidden), size=(hidden, n_outputs)),
            b2=np.zeros(n_outputs),
        )

    def forward(self, x: np.ndarray) -> Tuple[np.ndarray, Cache]:
        z1 = x @ self.W1 + self.b1
        a1 = relu(z1)
        z2 = a1 @ self.W2 + self.b2
        return softmax(z2), (x, z1, a1, z2)

    def predict(self, x: np.ndarray) -> np.ndarray:
        return self.forward(x)[0]

    def backward(self, cache: Cache, dz2: np.ndarray) -> Dict[str, np.ndarray]:
        """Weight gradients given the gradient w.r.t. the output logits."""
        x, z1, a1, _ = cache
        da1 = dz2 @ self.W2.T
        dz1 = da1 * (z1 > 0.0)
        return {
            "W1": x.T @ dz1,
            "b1": dz1.sum(axis=0),
            "W2": a1.T @ dz2,
            "b2": dz2.sum(axis=0),
        }

    def params(self) -> Dict[str, np.ndarray]:
        return {name: getattr(self, name) for name in PARAM_NAMES}

    def step(self, grads: Dict[str, np.ndarray], lr: float) -> None:
        for name in PARAM_NAMES:
            setattr(self, name, getattr(self, name) - lr * grads[name])

    def copy(self) -> "Network":
        return Network(**{name: value.copy() for name, value in self.params().items()})

    def is_finite(self) -> bool:
        return all(np.all(np.isfinite(value)) for value in self.params().values())

    def checksum(self) -> str:
        digest = hashlib.sha256()
        for name in PARAM_NAMES:
            digest.update(np.ascontiguousarray(getattr(self, name), dtype=np.float64).tobytes())
        return digest.hexdigest()
