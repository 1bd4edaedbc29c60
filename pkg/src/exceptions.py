"""
Exception hierarchy for the geometry toolkit
"""
from typing import List, Optional


class GeometryError(Exception):
    """Base class for all toolkit errors"""


class ParamSpaceMismatchError(GeometryError):
    """Scalars from different parameter spaces were combined"""

    def __init__(self, message: str = "parameter space mismatch"):
        super().__init__(message)


class MissingParameterError(GeometryError):
    """Evaluation assignment does not cover every parameter in use"""

    def __init__(self, missing: List[str]):
        self.missing = list(missing)
        super().__init__(f"missing parameter in assignment: {', '.join(self.missing)}")


class ExpressionSyntaxError(GeometryError):
    """Malformed expression text"""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        self.line = line
        self.column = column
        self.reason = message
        super().__init__(f"{message} (line {line}, column {column})")

    def shifted(self, line: int, column_offset: int) -> "ExpressionSyntaxError":
        """Re-anchor the error inside a larger document"""
        return type(self)(self.reason, line, self.column + column_offset)


class UnknownIdentifierError(ExpressionSyntaxError):
    """Identifier not declared in the parameter space"""


class ExponentError(ExpressionSyntaxError):
    """Exponent is not a nonnegative integer literal"""


class DimensionMismatchError(GeometryError):
    """Vectors, matrices or tensors of incompatible dimension"""


class DegenerateMetricError(GeometryError):
    """Metric has no exact inverse"""

    def __init__(self, message: str = "degenerate metric"):
        super().__init__(message)


class StructureValidationError(GeometryError):
    """Structure pack violates its defining relations"""

    def __init__(self, violations: List[str]):
        self.violations = list(violations)
        super().__init__("structure validation failed: " + "; ".join(self.violations))


class TensorSymmetryError(GeometryError):
    """Tensor components contradict the symmetries of their role"""


class NotAlternatingError(GeometryError):
    """Exterior calculus applied to a non-alternating tensor"""


class ClassConditionError(GeometryError):
    """Input lies outside the class an operation requires"""


class NaturalityError(GeometryError):
    """Connection fails to preserve the structure"""


class NotNonAbelianError(GeometryError):
    """Lie-bracket characterisation requested for a structure that is not non-Abelian"""

    def __init__(self, message: str = "structure is not non-Abelian"):
        super().__init__(message)


class SpecFileError(GeometryError):
    """Malformed spec file"""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        location = ""
        if line is not None:
            location = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(f"{message}{location}")
