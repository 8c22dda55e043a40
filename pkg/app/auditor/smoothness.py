"""
Numerical probe of weak smoothness.

At points with a unique minimal conjunct the gradient of the conjunction
should exist and vary continuously. The probe compares dual-number partials
with central differences and checks that they barely move under tiny
perturbations. Passing is evidence, not a proof.
"""
import logging
from typing import List, Optional, Sequence

from app.auditor.properties import connective_partials
from app.auditor.sampling import MIN_GAP, cell_rng, min_gap, sample_arity, sample_unique_min
from app.core.config import settings
from app.core.exceptions import ArithmeticFault, ConfigError, DomainViolationError
from app.schemas import SemanticsId, SemanticsParams
from app.schemas.audit import PropertyId, SmoothnessProbeReport
from app.semantics.base import BaseSemantics
from app.semantics.registry import get_semantics

logger = logging.getLogger(__name__)

PERTURBATION = 1e-6
AGREEMENT_TOL = 1e-6
STABILITY_TOL = 1e-3


def _fd_partials(semantics: BaseSemantics, values: Sequence[float], params: SemanticsParams, h: float) -> List[float]:
    partials = []
    for i in range(len(values)):
        up = list(values)
        down = list(values)
        up[i] += h
        down[i] -= h
        partials.append((semantics.conjoin(up, params) - semantics.conjoin(down, params)) / (2.0 * h))
    return partials


def weak_smoothness_probe(
    s: SemanticsId,
    trials: int,
    seed: int,
    params: Optional[SemanticsParams] = None,
) -> SmoothnessProbeReport:
    if trials < 1:
        raise ConfigError(f"trials must be >= 1, got {trials}")
    semantics = get_semantics(s)
    params = params or SemanticsParams()
    rng = cell_rng(seed, semantics.id, PropertyId.WEAK_SMOOTH_PROBE)
    h = settings.FD_STEP

    checked = excluded = passed = 0
    max_deviation = 0.0
    for _ in range(trials):
        m = sample_arity(rng)
        values = sample_unique_min(rng, semantics.id, m)
        shift = [float(d) for d in rng.uniform(-PERTURBATION, PERTURBATION, size=m)]
        # tied (or nearly tied) minima are outside the definition
        if min_gap(values) < MIN_GAP:
            excluded += 1
            continue
        try:
            dual = connective_partials(semantics, values, params)
            fd = _fd_partials(semantics, values, params, h)
            moved = connective_partials(semantics, [v + d for v, d in zip(values, shift)], params)
        except (ArithmeticFault, DomainViolationError) as e:
            excluded += 1
            logger.debug(f"Smoothness sample excluded: {e}")
            continue

        checked += 1
        agrees = all(abs(g - f) <= AGREEMENT_TOL * (1.0 + abs(g)) for g, f in zip(dual, fd))
        stable = all(abs(g - g2) <= STABILITY_TOL * (1.0 + abs(g)) for g, g2 in zip(dual, moved))
        max_deviation = max(max_deviation, *(abs(g - f) for g, f in zip(dual, fd)))
        if agrees and stable:
            passed += 1

    pass_rate = passed / checked if checked else 0.0
    logger.info(f"Smoothness probe for {semantics.name}: {passed}/{checked} passed, {excluded} excluded")
    return SmoothnessProbeReport(
        semantics=semantics.id,
        trials=trials,
        seed=seed,
        checked=checked,
        excluded=excluded,
        passed=passed,
        pass_rate=pass_rate,
        max_deviation=max_deviation,
    )
