"""
Randomized checks of the algebraic and analytic laws of each conjunction.

Laws are checked on the connective level: tuples of conjunct values go
straight into the semantics' n-ary conjunction. The first violation in
sample order becomes the witness.
"""
import itertools
import logging
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from app.auditor.sampling import (
    all_distinct_nonzero,
    cell_rng,
    sample_alpha,
    sample_arity,
    sample_nonzero,
    sample_values,
)
from app.autodiff.dual import DualNumber
from app.core.config import settings
from app.core.exceptions import ArithmeticFault, ConfigError, DomainViolationError
from app.schemas import SemanticsId, SemanticsParams
from app.schemas.audit import PropertyId, PropertyVerdict, Verdict, Witness
from app.semantics.base import BaseSemantics
from app.semantics.registry import get_semantics

logger = logging.getLogger(__name__)

GRADIENT_PROPERTIES = frozenset({PropertyId.SHADOW_LIFTING, PropertyId.WEAK_SMOOTH_PROBE})
SAMPLED_PERMUTATIONS = 20
MIN_CONFIDENT_TRIALS = 100
MIN_EFFECTIVE_FRACTION = 0.9


class SkipSample(Exception):
    """The drawn sample cannot be used for this law."""
    pass


def default_tolerance(prop: PropertyId) -> float:
    if prop in GRADIENT_PROPERTIES:
        return settings.GRADIENT_TOL
    return settings.ALGEBRAIC_TOL


def connective_partials(
    semantics: BaseSemantics, values: Sequence[float], params: SemanticsParams
) -> List[float]:
    """Partial derivative of the n-ary conjunction w.r.t. each conjunct."""
    partials = []
    for i in range(len(values)):
        seeded = [DualNumber(v, 1.0 if j == i else 0.0) for j, v in enumerate(values)]
        partials.append(semantics.conjoin_dual(seeded, params).derivative)
    return partials


def _conj(semantics: BaseSemantics, values: Sequence[float], params: SemanticsParams) -> float:
    return semantics.conjoin_dual([DualNumber(v, 0.0) for v in values], params).value


def _permutations(rng: np.random.Generator, m: int) -> List[List[int]]:
    if m <= 3:
        return [list(p) for p in itertools.permutations(range(m))][1:]
    return [[int(i) for i in rng.permutation(m)] for _ in range(SAMPLED_PERMUTATIONS)]


def _idempotent(sem, rng, params, tol) -> Optional[Witness]:
    m = sample_arity(rng)
    a = sample_values(rng, sem.id, 1)[0]
    result = _conj(sem, [a] * m, params)
    violation = abs(result - a)
    if violation > tol:
        return Witness(values=[a] * m, lhs=result, rhs=a, violation=violation)
    return None


def _commutative(sem, rng, params, tol) -> Optional[Witness]:
    m = sample_arity(rng)
    values = sample_values(rng, sem.id, m)
    reference = _conj(sem, values, params)
    for perm in _permutations(rng, m):
        permuted = _conj(sem, [values[i] for i in perm], params)
        violation = abs(reference - permuted)
        if violation > tol:
            return Witness(values=values, permutation=perm, lhs=reference, rhs=permuted, violation=violation)
    return None


def _associative(sem, rng, params, tol) -> Optional[Witness]:
    a1, a2, a3 = sample_values(rng, sem.id, 3)
    left = _conj(sem, [_conj(sem, [a1, a2], params), a3], params)
    right = _conj(sem, [a1, _conj(sem, [a2, a3], params)], params)
    violation = abs(left - right)
    if violation > tol:
        return Witness(values=[a1, a2, a3], lhs=left, rhs=right, violation=violation)
    return None


def _shadow_lifting(sem, rng, params, tol) -> Optional[Witness]:
    m = sample_arity(rng)
    values = sample_nonzero(rng, sem.id, m)
    if not all_distinct_nonzero(values):
        raise SkipSample("values must be nonzero and pairwise distinct")
    for i, partial in enumerate(connective_partials(sem, values, params)):
        if partial <= tol:
            return Witness(
                values=values,
                index=i,
                lhs=partial,
                rhs=tol,
                violation=tol - partial,
                note="partial derivative does not exceed the tolerance",
            )
    return None


def _min_max_bounded(sem, rng, params, tol) -> Optional[Witness]:
    m = sample_arity(rng)
    values = sample_values(rng, sem.id, m)
    result = _conj(sem, values, params)
    lo, hi = min(values), max(values)
    if result < lo - tol:
        return Witness(values=values, lhs=result, rhs=lo, violation=lo - result, note="below min")
    if result > hi + tol:
        return Witness(values=values, lhs=result, rhs=hi, violation=result - hi, note="above max")
    return None


def _scale_invariant(sem, rng, params, tol) -> Optional[Witness]:
    m = sample_arity(rng)
    values = sample_values(rng, sem.id, m)
    alpha = sample_alpha(rng, sem.id, values)
    if sem.id.is_fuzzy and alpha * max(values) > 1.0:
        raise SkipSample("scaled values leave [0,1]")
    lhs = alpha * _conj(sem, values, params)
    rhs = _conj(sem, [alpha * v for v in values], params)
    violation = abs(lhs - rhs)
    if violation > tol:
        return Witness(values=values, alpha=alpha, lhs=lhs, rhs=rhs, violation=violation)
    return None


LawCheck = Callable[[BaseSemantics, np.random.Generator, SemanticsParams, float], Optional[Witness]]

LAWS: Dict[PropertyId, LawCheck] = {
    PropertyId.IDEMPOTENT: _idempotent,
    PropertyId.COMMUTATIVE: _commutative,
    PropertyId.ASSOCIATIVE: _associative,
    PropertyId.SHADOW_LIFTING: _shadow_lifting,
    PropertyId.MIN_MAX_BOUNDED: _min_max_bounded,
    PropertyId.SCALE_INVARIANT: _scale_invariant,
}


def check_property(
    s: SemanticsId,
    p: PropertyId,
    trials: int,
    seed: int,
    tol: Optional[float] = None,
    params: Optional[SemanticsParams] = None,
) -> PropertyVerdict:
    """
    Search for a counterexample to law `p` of semantics `s`.

    Samples that cannot be evaluated (domain faults, ties) are skipped and
    counted. A run with fewer than 100 trials, or with fewer than 90% of
    trials effective, is flagged low-confidence.
    """
    if trials < 1:
        raise ConfigError(f"trials must be >= 1, got {trials}")
    p = PropertyId(p)
    if p not in LAWS:
        raise ConfigError(f"{p.value} is not a table property; use weak_smoothness_probe")
    tol = default_tolerance(p) if tol is None else tol
    if not tol > 0:
        raise ConfigError(f"Tolerance must be > 0, got {tol}")

    semantics = get_semantics(s)
    params = params or SemanticsParams()
    law = LAWS[p]
    rng = cell_rng(seed, semantics.id, p)

    witness: Optional[Witness] = None
    skipped = 0
    evaluated = 0
    for trial in range(trials):
        evaluated += 1
        try:
            witness = law(semantics, rng, params, tol)
        except (SkipSample, ArithmeticFault, DomainViolationError) as e:
            skipped += 1
            logger.debug(f"({semantics.name}, {p.value}) trial {trial} skipped: {e}")
            continue
        if witness is not None:
            logger.debug(f"({semantics.name}, {p.value}) counterexample at trial {trial}: {witness.values}")
            break

    effective = evaluated - skipped
    verdict = Verdict.COUNTEREXAMPLE if witness is not None else Verdict.HOLDS_ON_TRIALS
    low_confidence = trials < MIN_CONFIDENT_TRIALS
    if verdict is Verdict.HOLDS_ON_TRIALS and effective < MIN_EFFECTIVE_FRACTION * trials:
        low_confidence = True
    if low_confidence:
        logger.warning(f"({semantics.name}, {p.value}) low confidence: {effective} effective of {trials} trials")

    return PropertyVerdict(
        semantics=semantics.id,
        property=p,
        verdict=verdict,
        trials=trials,
        tolerance=tol,
        witness=witness,
        params=params,
        skipped=skipped,
        effective_trials=effective,
        low_confidence=low_confidence,
    )


def replay_witness(verdict: PropertyVerdict) -> float:
    """
    Re-evaluate a counterexample without the sampler and return its violation.

    For shadow-lifting the violation is the tolerance minus the offending
    partial derivative; the other laws return |lhs - rhs| or the distance
    outside [min, max].
    """
    w = verdict.witness
    if w is None:
        raise ConfigError(f"({verdict.semantics.value}, {verdict.property.value}) has no witness")

    sem = get_semantics(verdict.semantics)
    params = verdict.params
    conj = sem.conjoin
    prop = verdict.property
    if prop is PropertyId.IDEMPOTENT:
        return abs(conj(w.values, params) - w.values[0])
    if prop is PropertyId.COMMUTATIVE:
        return abs(conj(w.values, params) - conj([w.values[i] for i in w.permutation], params))
    if prop is PropertyId.ASSOCIATIVE:
        a1, a2, a3 = w.values
        return abs(conj([conj([a1, a2], params), a3], params) - conj([a1, conj([a2, a3], params)], params))
    if prop is PropertyId.SHADOW_LIFTING:
        return verdict.tolerance - connective_partials(sem, w.values, params)[w.index]
    if prop is PropertyId.MIN_MAX_BOUNDED:
        result = conj(w.values, params)
        return max(min(w.values) - result, result - max(w.values))
    return abs(w.alpha * conj(w.values, params) - conj([w.alpha * v for v in w.values], params))


def witness_confirmed(verdict: PropertyVerdict) -> bool:
    """True when replaying the witness still breaks the law."""
    violation = replay_witness(verdict)
    if verdict.property is PropertyId.SHADOW_LIFTING:
        return violation >= 0.0
    return violation > verdict.tolerance
