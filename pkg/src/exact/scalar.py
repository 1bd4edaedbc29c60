"""
Exact polynomial scalars over the rationals
Term maps keyed by exponent tuples, Fraction coefficients, canonical form enforced
"""
import logging
import re
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from src.exceptions import MissingParameterError, ParamSpaceMismatchError

logger = logging.getLogger(__name__)

Exponents = Tuple[int, ...]
Rational = Union[int, Fraction]


class ParamSpace:
    """Ordered set of parameter identifiers"""

    IDENTIFIER = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*\Z")

    __slots__ = ("names", "_index")

    def __init__(self, names: Sequence[str] = ()):
        names = tuple(names)
        for name in names:
            if not isinstance(name, str) or not ParamSpace.IDENTIFIER.match(name):
                raise ValueError(f"invalid parameter identifier: {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate parameter identifiers in {list(names)}")
        self.names = names
        self._index = {name: i for i, name in enumerate(names)}

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParamSpace):
            return NotImplemented
        return self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"ParamSpace({list(self.names)})"

    def __contains__(self, name: str) -> bool:
        return name in self._index

    @property
    def size(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self._index[name]

    def extended(self, extra: Iterable[str]) -> "ParamSpace":
        """Space with additional trailing identifiers"""
        return ParamSpace(self.names + tuple(extra))

    def unit_exponents(self) -> Exponents:
        return (0,) * len(self.names)

    def zero(self) -> "Scalar":
        return Scalar(self, {}, canonical=True)

    def one(self) -> "Scalar":
        return self.const(1)

    def const(self, value: Rational) -> "Scalar":
        value = Fraction(value)
        if value == 0:
            return self.zero()
        return Scalar(self, {self.unit_exponents(): value}, canonical=True)

    def var(self, name: str) -> "Scalar":
        if name not in self._index:
            raise KeyError(f"unknown parameter {name!r}")
        exps = [0] * len(self.names)
        exps[self._index[name]] = 1
        return Scalar(self, {tuple(exps): Fraction(1)}, canonical=True)

    def variables(self) -> List["Scalar"]:
        return [self.var(name) for name in self.names]


class Scalar:
    """Element of Q[params] in canonical form"""

    __slots__ = ("space", "terms")

    def __init__(self, space: ParamSpace, terms: Optional[Mapping[Exponents, Rational]] = None,
                 canonical: bool = False):
        self.space = space
        if canonical:
            self.terms: Dict[Exponents, Fraction] = dict(terms or {})
            return
        width = len(space.names)
        cleaned: Dict[Exponents, Fraction] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != width or any(e < 0 for e in exps):
                raise ValueError(f"exponent vector {exps} does not fit {space!r}")
            coeff = Fraction(coeff)
            if coeff:
                cleaned[exps] = cleaned.get(exps, Fraction(0)) + coeff
        self.terms = {e: c for e, c in cleaned.items() if c}

    # -- coercion -------------------------------------------------------

    def _coerce(self, other) -> Optional["Scalar"]:
        if isinstance(other, Scalar):
            if other.space is not self.space and other.space != self.space:
                raise ParamSpaceMismatchError()
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.space.const(other)
        return None

    # -- ring operations -------------------------------------------------

    def __add__(self, other) -> "Scalar":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        result = dict(self.terms)
        for exps, coeff in other.terms.items():
            total = result.get(exps, 0) + coeff
            if total:
                result[exps] = total
            else:
                result.pop(exps, None)
        return Scalar(self.space, result, canonical=True)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(self.space, {e: -c for e, c in self.terms.items()}, canonical=True)

    def __sub__(self, other) -> "Scalar":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Scalar":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Scalar":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.terms or not other.terms:
            return self.space.zero()
        result: Dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                result[exps] = result.get(exps, 0) + c1 * c2
        return Scalar(self.space, {e: c for e, c in result.items() if c}, canonical=True)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Scalar":
        """Division by a nonzero rational constant"""
        if isinstance(other, Scalar):
            if not other.is_constant() or other.is_zero():
                raise ZeroDivisionError("division only by nonzero rational constants")
            other = other.to_fraction()
        if not isinstance(other, (int, Fraction)) or isinstance(other, bool):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("division by zero")
        factor = 1 / Fraction(other)
        return Scalar(self.space, {e: c * factor for e, c in self.terms.items()}, canonical=True)

    def __pow__(self, power: int) -> "Scalar":
        if not isinstance(power, int) or power < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.space.one()
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    # -- comparison ------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.space == other.space and self.terms == other.terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant() and self.to_fraction() == other
        return NotImplemented

    def __ne__(self, other) -> bool:
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self) -> int:
        if self.is_constant():
            return hash(self.to_fraction())
        return hash((self.space.names, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a rational constant")
        return next(iter(self.terms.values()), Fraction(0))

    def degree(self) -> int:
        """Total degree; -1 for the zero scalar"""
        return max((sum(e) for e in self.terms), default=-1)

    def parameters(self) -> List[str]:
        """Names of the parameters that actually occur"""
        used = set()
        for exps in self.terms:
            used.update(i for i, e in enumerate(exps) if e)
        return [self.space.names[i] for i in sorted(used)]

    def ordered_terms(self) -> List[Tuple[Exponents, Fraction]]:
        """Terms in graded lexicographic order, highest first"""
        return sorted(self.terms.items(), key=lambda item: (-sum(item[0]), tuple(-e for e in item[0])))

    def leading_coefficient(self) -> Fraction:
        terms = self.ordered_terms()
        return terms[0][1] if terms else Fraction(0)

    def normalized(self) -> "Scalar":
        """Scalar multiple with leading coefficient 1"""
        if self.is_zero():
            return self
        return self / self.leading_coefficient()

    # -- specialisation --------------------------------------------------

    def substitute(self, values: Mapping[str, Rational]) -> "Scalar":
        """Replace the assigned parameters by rationals; others stay symbolic"""
        positions = {self.space.index(name): Fraction(v) for name, v in values.items() if name in self.space}
        if not positions:
            return self
        result: Dict[Exponents, Fraction] = {}
        for exps, coeff in self.terms.items():
            factor = coeff
            reduced = list(exps)
            for i, value in positions.items():
                if exps[i]:
                    factor *= value ** exps[i]
                    reduced[i] = 0
            if factor:
                key = tuple(reduced)
                result[key] = result.get(key, 0) + factor
        return Scalar(self.space, {e: c for e, c in result.items() if c}, canonical=True)

    def evaluate(self, values: Mapping[str, Rational]) -> "Scalar":
        """Full substitution; every occurring parameter must be assigned"""
        missing = [name for name in self.parameters() if name not in values]
        if missing:
            raise MissingParameterError(missing)
        return self.substitute(values)

    def rebased(self, space: ParamSpace) -> "Scalar":
        """Same polynomial expressed over a space containing all used parameters"""
        if space == self.space:
            return self
        mapping = [space.index(name) for name in self.space.names]
        terms = {}
        for exps, coeff in self.terms.items():
            target = [0] * space.size
            for i, e in enumerate(exps):
                if e:
                    target[mapping[i]] = e
            terms[tuple(target)] = coeff
        return Scalar(space, terms, canonical=True)

    # -- printing --------------------------------------------------------

    def _monomial(self, exps: Exponents) -> str:
        factors = []
        for name, e in zip(self.space.names, exps):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for position, (exps, coeff) in enumerate(self.ordered_terms()):
            monomial = self._monomial(exps)
            magnitude = abs(coeff)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            if position == 0:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(pieces)

    def __repr__(self) -> str:
        return f"Scalar({self})"


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    return a + b


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return a * b


def scalar_eval(a: Scalar, assignment: Mapping[str, Rational]) -> Scalar:
    return a.evaluate(assignment)
