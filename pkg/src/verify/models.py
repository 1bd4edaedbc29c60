"""
Report records for the check suite
"""
import logging
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from src.structure import Mismatch

logger = logging.getLogger(__name__)


class CheckStatus(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    HYPOTHESIS_NOT_MET = "hypothesis_not_met"


class Witness(BaseModel):
    """First component where the two sides of an identity differ"""
    indices: Tuple[int, ...] = Field(default_factory=tuple, description="1-based component index, empty for scalars")
    lhs: str = Field(..., description="Left-hand side at the witness")
    rhs: str = Field(..., description="Right-hand side at the witness")

    @classmethod
    def from_mismatch(cls, mismatch: Mismatch) -> "Witness":
        return cls(indices=mismatch.one_based(), lhs=str(mismatch.lhs), rhs=str(mismatch.rhs))

    @classmethod
    def boolean(cls) -> "Witness":
        """Witness of a predicate that should hold but does not"""
        return cls(lhs="false", rhs="true")


class CheckResult(BaseModel):
    """Outcome of one registered check"""
    name: str = Field(..., description="Registry name")
    status: CheckStatus = Field(..., description="pass, fail or hypothesis_not_met")
    witness: Optional[Witness] = Field(None, description="Present exactly when the check failed")
    anchor: str = Field("", description="Statement of the identity being checked")
    note: str = Field("", description="Skipped hypothesis or annotation")

    @property
    def failed(self) -> bool:
        return self.status == CheckStatus.FAIL


class SuiteReport(BaseModel):
    """Ordered results of a suite run"""
    name: str = Field(..., description="Input label")
    results: List[CheckResult] = Field(default_factory=list, description="Results in registry order")

    def count(self, status: CheckStatus) -> int:
        return sum(1 for result in self.results if result.status == status)

    @property
    def any_failed(self) -> bool:
        return any(result.failed for result in self.results)

    def get(self, name: str) -> CheckResult:
        for result in self.results:
            if result.name == name:
                return result
        raise KeyError(name)
