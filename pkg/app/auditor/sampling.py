"""
Seeded samplers for conjunct-value tuples.

Every (semantics, property) cell draws from its own stream derived from the
run seed, so cells can be audited in any order or in parallel with
identical results.
"""
from typing import List, Sequence, Tuple

import numpy as np

from app.core.exceptions import ConfigError
from app.schemas import SemanticsId
from app.schemas.audit import PropertyId

ARITIES: Tuple[int, ...] = (2, 3, 5)

SAMPLE_RANGES = {
    SemanticsId.DL2: (0.0, 10.0),
    SemanticsId.STL: (-10.0, 10.0),
}
FUZZY_RANGE = (0.0, 1.0)

# Shadow-lifting keeps every conjunct at least this far from zero. A product
# of four conjuncts then stays above 0.05**4 = 6.25e-6, clear of the 1e-6
# gradient tolerance.
MAGNITUDE_FLOOR = 0.05

# Minimum gap between the smallest and second-smallest conjunct in the
# smoothness heuristic.
MIN_GAP = 1e-3


def cell_rng(seed: int, semantics: SemanticsId, prop: PropertyId) -> np.random.Generator:
    if seed < 0:
        raise ConfigError(f"Seed must be >= 0, got {seed}")
    sem_idx = list(SemanticsId).index(semantics)
    prop_idx = list(PropertyId).index(prop)
    return np.random.default_rng(np.random.SeedSequence([seed, sem_idx, prop_idx]))


def sample_range(semantics: SemanticsId) -> Tuple[float, float]:
    if semantics.is_fuzzy:
        return FUZZY_RANGE
    return SAMPLE_RANGES[semantics]


def sample_arity(rng: np.random.Generator) -> int:
    return int(rng.choice(ARITIES))


def sample_values(rng: np.random.Generator, semantics: SemanticsId, m: int) -> List[float]:
    lo, hi = sample_range(semantics)
    return [float(v) for v in rng.uniform(lo, hi, size=m)]


def sample_nonzero(rng: np.random.Generator, semantics: SemanticsId, m: int) -> List[float]:
    """Uniform over the sampling range with |v| >= MAGNITUDE_FLOOR."""
    lo, hi = sample_range(semantics)
    if lo < 0.0:
        magnitudes = rng.uniform(MAGNITUDE_FLOOR, hi, size=m)
        signs = np.where(rng.random(size=m) < 0.5, -1.0, 1.0)
        return [float(v) for v in magnitudes * signs]
    return [float(v) for v in rng.uniform(max(lo, MAGNITUDE_FLOOR), hi, size=m)]


def sample_unique_min(rng: np.random.Generator, semantics: SemanticsId, m: int) -> List[float]:
    """Values for the smoothness heuristic; STL stays away from the sign change."""
    if semantics.is_fuzzy:
        return [float(v) for v in rng.uniform(0.05, 0.95, size=m)]
    if semantics is SemanticsId.STL:
        magnitudes = rng.uniform(1.0, 10.0, size=m)
        signs = np.where(rng.random(size=m) < 0.5, -1.0, 1.0)
        return [float(v) for v in magnitudes * signs]
    return [float(v) for v in rng.uniform(0.1, 10.0, size=m)]


def sample_alpha(rng: np.random.Generator, semantics: SemanticsId, values: Sequence[float]) -> float:
    """alpha in (0, 4]; for fuzzy semantics also alpha * max(values) <= 1."""
    upper = 4.0
    if semantics.is_fuzzy:
        peak = max(values)
        if peak > 0.0:
            upper = min(upper, 1.0 / peak)
    return upper * (1.0 - float(rng.random()))


def all_distinct_nonzero(values: Sequence[float]) -> bool:
    return all(v != 0.0 for v in values) and len(set(values)) == len(values)


def min_gap(values: Sequence[float]) -> float:
    ordered = sorted(values)
    return ordered[1] - ordered[0]
