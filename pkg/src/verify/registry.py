"""
Ordered check registry with class and hypothesis gates
"""
import logging
from dataclasses import dataclass, field
from typing import Callable, List, NamedTuple, Optional, Sequence, Union

from src.classify import ClassName
from src.curvature import FormulaOutcome
from src.exceptions import ClassConditionError, GeometryError
from src.levicivita import killing_check
from src.liealg import non_abelian_structure_check
from src.structure import Mismatch
from src.verify.models import CheckResult, CheckStatus, Witness

logger = logging.getLogger(__name__)

CLASS_LABELS = {
    ClassName.F0: "F0",
    ClassName.F3: "F3",
    ClassName.F7: "F7",
    ClassName.F3_PLUS_F7: "F3⊕F7",
}


class Outcome(NamedTuple):
    """Check outcome carrying an annotation"""
    mismatch: Union[None, bool, Mismatch]
    note: str = ""


CheckValue = Union[None, bool, Mismatch, Outcome, List[CheckResult], List[FormulaOutcome]]
Gate = Callable[[object], Optional[str]]


@dataclass
class Check:
    """Registered check: gates are evaluated in order, the first unmet one skips the check"""
    name: str
    anchor: str
    run: Callable[[object], CheckValue]
    gates: Sequence[Gate] = field(default_factory=tuple)


REGISTRY: List[Check] = []


def register(name: str, anchor: str, *gates: Gate):
    """Decorator appending a check to the registry in definition order"""
    def decorator(fn: Callable[[object], CheckValue]):
        if any(check.name == name for check in REGISTRY):
            raise ValueError(f"check {name!r} registered twice")
        REGISTRY.append(Check(name, anchor, fn, gates))
        return fn
    return decorator


# -- gates ------------------------------------------------------------------

def in_class(name: ClassName) -> Gate:
    def gate(pipeline) -> Optional[str]:
        if pipeline.membership.member_of(name):
            return None
        return f"structure is not in {CLASS_LABELS[name]}"
    return gate


def non_abelian(pipeline) -> Optional[str]:
    return None if non_abelian_structure_check(pipeline.alg, pipeline.structure) else "structure is not non-Abelian"


def xi_killing(pipeline) -> Optional[str]:
    return None if killing_check(pipeline.structure, pipeline.nabla) else "ξ is not Killing"


def dt_zero(pipeline) -> Optional[str]:
    return None if pipeline.DT.is_zero() else "DT ≠ 0"


def einstein(pipeline) -> Optional[str]:
    return None if pipeline.einstein.passed else "metric is not Einstein"


def family(pipeline) -> Optional[str]:
    return None if pipeline.is_family else "input is not the five-dimensional family"


def symbolic_family(pipeline) -> Optional[str]:
    if not pipeline.is_family:
        return "input is not the five-dimensional family"
    return None if not pipeline.assignment else "family parameters are specialised"


# -- evaluation -----------------------------------------------------------------

def _skipped(check: Check, reason: str) -> CheckResult:
    logger.debug(f"{check.name}: hypothesis not met ({reason})")
    return CheckResult(name=check.name, status=CheckStatus.HYPOTHESIS_NOT_MET,
                       anchor=check.anchor, note=reason)


def _from_formula(outcome: FormulaOutcome) -> CheckResult:
    if not outcome.hypothesis_met:
        return CheckResult(name=outcome.name, status=CheckStatus.HYPOTHESIS_NOT_MET,
                           anchor=outcome.statement, note=outcome.hypothesis)
    if outcome.mismatch is None:
        return CheckResult(name=outcome.name, status=CheckStatus.PASS, anchor=outcome.statement)
    return CheckResult(name=outcome.name, status=CheckStatus.FAIL, anchor=outcome.statement,
                       witness=Witness.from_mismatch(outcome.mismatch))


def to_results(check: Check, value: CheckValue) -> List[CheckResult]:
    """Normalise whatever a check returned into result records"""
    if isinstance(value, list):
        return [_from_formula(item) if isinstance(item, FormulaOutcome) else item for item in value]
    note = ""
    if isinstance(value, Outcome):
        value, note = value.mismatch, value.note
    if value is None or value is True:
        return [CheckResult(name=check.name, status=CheckStatus.PASS, anchor=check.anchor, note=note)]
    witness = Witness.boolean() if value is False else Witness.from_mismatch(value)
    return [CheckResult(name=check.name, status=CheckStatus.FAIL, anchor=check.anchor,
                        witness=witness, note=note)]


def evaluate(check: Check, pipeline) -> List[CheckResult]:
    """Run one check against a prepared pipeline"""
    try:
        for gate in check.gates:
            reason = gate(pipeline)
            if reason:
                return [_skipped(check, reason)]
        value = check.run(pipeline)
    except ClassConditionError as e:
        return [_skipped(check, str(e))]
    except GeometryError as e:
        logger.warning(f"Check {check.name} raised {type(e).__name__}: {e}")
        return [CheckResult(name=check.name, status=CheckStatus.FAIL, anchor=check.anchor,
                            witness=Witness.boolean(), note=str(e))]
    return to_results(check, value)
