"""
Semantics registry and per-semantics defaults.
"""
from typing import Dict, Union

from app.core.exceptions import ConfigError
from app.schemas import AtomOracle, DomainSpec, OracleMode, SemanticsId
from app.semantics.base import (
    BaseSemantics,
    Dl2Semantics,
    GoedelSemantics,
    LukasiewiczSemantics,
    ProductSemantics,
    StlSemantics,
    YagerSemantics,
)

_semantics: Dict[SemanticsId, BaseSemantics] = {
    SemanticsId.DL2: Dl2Semantics(),
    SemanticsId.GOEDEL: GoedelSemantics(),
    SemanticsId.LUKASIEWICZ: LukasiewiczSemantics(),
    SemanticsId.YAGER: YagerSemantics(),
    SemanticsId.PRODUCT: ProductSemantics(),
    SemanticsId.STL: StlSemantics(),
}

DOMAINS: Dict[SemanticsId, DomainSpec] = {sid: sem.domain for sid, sem in _semantics.items()}


def _semantics_id(s: Union[SemanticsId, str]) -> SemanticsId:
    try:
        return SemanticsId(s)
    except ValueError:
        raise ConfigError(f"Unknown semantics '{s}'") from None


def get_semantics(s: Union[SemanticsId, str]) -> BaseSemantics:
    """Get the semantics instance."""
    return _semantics[_semantics_id(s)]


def default_oracle(s: Union[SemanticsId, str]) -> AtomOracle:
    sid = _semantics_id(s)
    if sid is SemanticsId.STL:
        return AtomOracle(mode=OracleMode.ROBUSTNESS)
    if sid.is_fuzzy:
        return AtomOracle(mode=OracleMode.GRADED)
    # DL2 translates atoms itself
    return AtomOracle(mode=OracleMode.CRISP)


def domain_true(s: Union[SemanticsId, str], v: float) -> bool:
    """Whether v lies in the part of the semantics' domain that means true."""
    return DOMAINS[_semantics_id(s)].is_true(v)
