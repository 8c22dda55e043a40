"""
Semantics classes: how each differentiable logic translates atoms, conjunction and negation.
"""
import logging
import math
from abc import ABC, abstractmethod
from typing import List, Optional, Sequence, Tuple

from app.autodiff.dual import DualNumber, as_dual
from app.core.exceptions import NNFUnsupportedError, OracleMismatchError
from app.logic.formula import Atom, Conj, Formula
from app.logic.nnf import has_negated_conj, to_nnf
from app.schemas import AtomOracle, DomainSpec, OracleMode, SemanticsId, SemanticsParams, TrueRegion
from app.semantics.connectives import (
    StlEvalTrace,
    Value,
    dl2_and_dual,
    fuzzy_not_dual,
    goedel_and_dual,
    lukasiewicz_and_dual,
    product_and_dual,
    stl_and_dual,
    yager_and_dual,
)
from app.semantics.oracles import DualEnv, atom_oracle_dual, dl2_atom_dual

logger = logging.getLogger(__name__)


class BaseSemantics(ABC):
    """Base class for all semantics."""

    def __init__(self, semantics_id: SemanticsId, domain: DomainSpec):
        self.id = semantics_id
        self.domain = domain

    @property
    def name(self) -> str:
        return self.id.value

    def check_oracle(self, oracle: AtomOracle) -> None:
        """Raise OracleMismatchError if the oracle cannot feed this semantics."""
        pass

    def prepare(self, f: Formula) -> Formula:
        """Formula shape this semantics evaluates; non-DL2 semantics keep it as written."""
        return f

    @abstractmethod
    def atom(self, atom: Atom, denv: DualEnv, params: SemanticsParams, oracle: AtomOracle) -> DualNumber:
        """Translate a (possibly negated) atom."""
        pass

    @abstractmethod
    def conjoin_dual(self, values: Sequence[DualNumber], params: SemanticsParams) -> DualNumber:
        """n-ary conjunction of already translated conjuncts."""
        pass

    @abstractmethod
    def negate_dual(self, value: DualNumber) -> DualNumber:
        pass

    def conjoin(self, values: Sequence[Value], params: Optional[SemanticsParams] = None) -> Value:
        """Connective-level conjunction; plain floats in give a plain float out."""
        result = self.conjoin_dual([as_dual(v) for v in values], params or SemanticsParams())
        if any(isinstance(v, DualNumber) for v in values):
            return result
        return result.value

    def negate(self, value: Value) -> Value:
        result = self.negate_dual(as_dual(value))
        return result if isinstance(value, DualNumber) else result.value

    def _conj_node(
        self,
        values: List[DualNumber],
        params: SemanticsParams,
        traces: Optional[List[StlEvalTrace]],
    ) -> DualNumber:
        return self.conjoin_dual(values, params)

    def evaluate(
        self,
        f: Formula,
        denv: DualEnv,
        params: SemanticsParams,
        oracle: AtomOracle,
        traces: Optional[List[StlEvalTrace]] = None,
    ) -> DualNumber:
        """Evaluate a prepared formula on dual-valued variables."""
        if isinstance(f, Atom):
            return self.atom(f, denv, params, oracle)
        if isinstance(f, Conj):
            values = [self.evaluate(c, denv, params, oracle, traces) for c in f.children]
            result = self._conj_node(values, params, traces)
            return self.negate_dual(result) if f.negated else result
        return self.negate_dual(self.evaluate(f.child, denv, params, oracle, traces))


class Dl2Semantics(BaseSemantics):
    """DL2: atoms are distances to satisfaction, conjunction is addition, no negation."""

    def __init__(self):
        super().__init__(
            SemanticsId.DL2,
            DomainSpec(lo=0.0, hi=math.inf, true_region=TrueRegion.EQUALS, true_value=0.0),
        )

    def prepare(self, f: Formula) -> Formula:
        nnf = to_nnf(f)
        if has_negated_conj(nnf):
            raise NNFUnsupportedError("DL2 has no translation for the negation of a conjunction")
        return nnf

    def atom(self, atom: Atom, denv: DualEnv, params: SemanticsParams, oracle: AtomOracle) -> DualNumber:
        return dl2_atom_dual(atom, denv, params.xi)

    def conjoin_dual(self, values: Sequence[DualNumber], params: SemanticsParams) -> DualNumber:
        total = values[0]
        for v in values[1:]:
            total = dl2_and_dual(total, v)
        return total

    def negate_dual(self, value: DualNumber) -> DualNumber:
        raise NNFUnsupportedError("DL2 defines negation on atoms only")


class FuzzySemantics(BaseSemantics):
    """Fuzzy logics on [0,1]: a t-norm for conjunction and 1 - x for negation."""

    def __init__(self, semantics_id: SemanticsId):
        super().__init__(
            semantics_id,
            DomainSpec(lo=0.0, hi=1.0, true_region=TrueRegion.EQUALS, true_value=1.0),
        )

    def check_oracle(self, oracle: AtomOracle) -> None:
        if oracle.mode not in (OracleMode.CRISP, OracleMode.GRADED):
            raise OracleMismatchError(
                f"{self.name} needs a crisp or graded oracle, got {oracle.mode.value}"
            )

    @abstractmethod
    def tnorm(self, a: DualNumber, b: DualNumber, params: SemanticsParams) -> DualNumber:
        pass

    def atom(self, atom: Atom, denv: DualEnv, params: SemanticsParams, oracle: AtomOracle) -> DualNumber:
        return atom_oracle_dual(atom, denv, oracle)

    def conjoin_dual(self, values: Sequence[DualNumber], params: SemanticsParams) -> DualNumber:
        # n-ary fuzzy conjunction is the left fold of the binary t-norm
        result = values[0]
        for v in values[1:]:
            result = self.tnorm(result, v, params)
        return result

    def negate_dual(self, value: DualNumber) -> DualNumber:
        return fuzzy_not_dual(value)


class GoedelSemantics(FuzzySemantics):
    def __init__(self):
        super().__init__(SemanticsId.GOEDEL)

    def tnorm(self, a: DualNumber, b: DualNumber, params: SemanticsParams) -> DualNumber:
        return goedel_and_dual(a, b)


class LukasiewiczSemantics(FuzzySemantics):
    def __init__(self):
        super().__init__(SemanticsId.LUKASIEWICZ)

    def tnorm(self, a: DualNumber, b: DualNumber, params: SemanticsParams) -> DualNumber:
        return lukasiewicz_and_dual(a, b)


class YagerSemantics(FuzzySemantics):
    def __init__(self):
        super().__init__(SemanticsId.YAGER)

    def tnorm(self, a: DualNumber, b: DualNumber, params: SemanticsParams) -> DualNumber:
        return yager_and_dual(a, b, params.p)


class ProductSemantics(FuzzySemantics):
    def __init__(self):
        super().__init__(SemanticsId.PRODUCT)

    def tnorm(self, a: DualNumber, b: DualNumber, params: SemanticsParams) -> DualNumber:
        return product_and_dual(a, b)


class StlSemantics(BaseSemantics):
    """
    STL robustness: real-valued atoms, smooth n-ary conjunction, negation by sign flip.

    Binary and() is the M = 2 case of the n-ary operator, so nested binary
    conjunctions are evaluated as nested 2-ary applications.
    """

    def __init__(self):
        super().__init__(
            SemanticsId.STL,
            DomainSpec(lo=-math.inf, hi=math.inf, true_region=TrueRegion.GREATER_THAN, true_value=0.0),
        )

    def check_oracle(self, oracle: AtomOracle) -> None:
        if oracle.mode is not OracleMode.ROBUSTNESS:
            raise OracleMismatchError(f"stl needs the robustness oracle, got {oracle.mode.value}")

    def atom(self, atom: Atom, denv: DualEnv, params: SemanticsParams, oracle: AtomOracle) -> DualNumber:
        return atom_oracle_dual(atom, denv, oracle)

    def conjoin_traced(
        self, values: Sequence[DualNumber], params: SemanticsParams
    ) -> Tuple[DualNumber, StlEvalTrace]:
        result, trace = stl_and_dual(values, params.nu, params.stl_literal)
        if trace.clamped:
            logger.warning(f"STL exponent clamped at a_min={trace.a_min}")
        return result, trace

    def conjoin_dual(self, values: Sequence[DualNumber], params: SemanticsParams) -> DualNumber:
        return self.conjoin_traced(values, params)[0]

    def _conj_node(
        self,
        values: List[DualNumber],
        params: SemanticsParams,
        traces: Optional[List[StlEvalTrace]],
    ) -> DualNumber:
        result, trace = self.conjoin_traced(values, params)
        if traces is not None:
            traces.append(trace)
        return result

    def negate_dual(self, value: DualNumber) -> DualNumber:
        return -value
