"""
Spec file parser
Line-oriented description of a Lie algebra with an almost contact B-metric structure
"""
import logging
import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.exact import ParamSpace, Scalar, parse_expr
from src.exceptions import ExpressionSyntaxError, SpecFileError
from src.fixtures import Fixture
from src.liealg import LieAlgebraSpec, Vector
from src.structure import StructurePack

logger = logging.getLogger(__name__)

Span = Tuple[str, int]


def parse_combination(text: str, space: ParamSpace, dim: int, basis: str = "e") -> Vector:
    """Parse Σ c_k e_k with coefficients polynomial in the parameters

    Raises:
        ExpressionSyntaxError: malformed text or a term not linear in the basis
    """
    names = [f"{basis}{k + 1}" for k in range(dim)]
    clash = [name for name in names if name in space]
    if clash:
        raise ExpressionSyntaxError(f"parameter name clashes with basis identifier {clash[0]}")
    extended = space.extended(names)
    expression = parse_expr(text, extended)
    width = space.size
    coefficients: List[Dict[Tuple[int, ...], object]] = [{} for _ in range(dim)]
    for exps, coeff in expression.terms.items():
        basis_part = exps[width:]
        if sum(basis_part) != 1:
            raise ExpressionSyntaxError("not a linear combination of basis vectors")
        coefficients[basis_part.index(1)][exps[:width]] = coeff
    return Vector(space, [Scalar(space, terms, canonical=True) for terms in coefficients])


class SpecParser:
    """Parse spec files into a Lie algebra and a structure pack"""

    PATTERNS = {
        "dim": re.compile(r"dim\s+(\S+)\s*\Z"),
        "params": re.compile(r"params\b\s*(.*)\Z"),
        "bracket": re.compile(r"bracket\s+(\d+)\s+(\d+)\s*=\s*(.*)\Z"),
        "phi": re.compile(r"phi\s+(\d+)\s*=\s*(.*)\Z"),
        "xi": re.compile(r"xi\s*=\s*(.*)\Z"),
        "eta": re.compile(r"eta\s*=\s*(.*)\Z"),
        "metric_diag": re.compile(r"metric\s+diag\s+(.*)\Z"),
        "metric_row": re.compile(r"metric\s+row\s+(\d+)\s+(.*)\Z"),
    }

    def __init__(self, name: str = "custom"):
        self.name = name
        logger.info(f"Initialized SpecParser for '{name}'")

    # -- helpers ------------------------------------------------------------

    @staticmethod
    def split_list(text: str, offset: int) -> List[Span]:
        """Comma-separated when a comma is present, otherwise whitespace-separated; keeps columns"""
        if "," in text:
            spans, start = [], 0
            for piece in text.split(","):
                stripped = piece.strip()
                spans.append((stripped, offset + start + (len(piece) - len(piece.lstrip()))))
                start += len(piece) + 1
            return spans
        return [(m.group(0), offset + m.start()) for m in re.finditer(r"\S+", text)]

    @staticmethod
    def _strip_comment(raw: str) -> str:
        return raw.split("#", 1)[0].rstrip()

    def _expression(self, text: str, column: int, line: int, space: ParamSpace) -> Scalar:
        try:
            return parse_expr(text, space)
        except ExpressionSyntaxError as e:
            raise e.shifted(line, column)

    def _combination(self, text: str, column: int, line: int, space: ParamSpace, dim: int) -> Vector:
        try:
            return parse_combination(text, space, dim)
        except ExpressionSyntaxError as e:
            raise e.shifted(line, column)

    @staticmethod
    def _index(raw: str, dim: int, line: int, what: str) -> int:
        value = int(raw)
        if not 1 <= value <= dim:
            raise SpecFileError(f"{what} index {value} out of range 1..{dim}", line)
        return value - 1

    def _list(self, text: str, start: int, line: int, space: ParamSpace, dim: int, what: str) -> List[Scalar]:
        spans = self.split_list(text, start)
        if len(spans) != dim or any(not item for item, _ in spans):
            raise SpecFileError(f"{what} needs {dim} entries, got {len(spans)}", line)
        return [self._expression(item, column, line, space) for item, column in spans]

    # -- parsing ------------------------------------------------------------

    def parse_file(self, path: str | Path) -> Fixture:
        path = Path(path)
        if not path.exists():
            raise FileNotFoundError(f"Spec file not found: {path}")
        self.name = path.stem
        return self.parse(path.read_text(encoding="utf-8"))

    def parse(self, text: str) -> Fixture:
        """Parse spec text

        Returns:
            Fixture holding the Lie algebra and the structure pack

        Raises:
            SpecFileError: structural problems, with the line number
            ExpressionSyntaxError: malformed expressions, with line and column
            DegenerateMetricError: the metric has no exact inverse
        """
        lines = [(number, self._strip_comment(raw)) for number, raw in enumerate(text.splitlines(), 1)]
        lines = [(number, line) for number, line in lines if line.strip()]

        dim, space = self._header(lines)
        brackets: Dict[Tuple[int, int], Vector] = {}
        phi_columns: Dict[int, Vector] = {}
        xi: Optional[Vector] = None
        eta: Optional[List[Scalar]] = None
        metric_rows: Dict[int, List[Scalar]] = {}
        diag_line: Optional[int] = None

        for number, line in lines:
            indent = len(line) - len(line.lstrip())
            body = line.strip()
            if self.PATTERNS["dim"].match(body) or self.PATTERNS["params"].match(body):
                continue
            match = self.PATTERNS["bracket"].match(body)
            if match:
                i = self._index(match.group(1), dim, number, "bracket")
                j = self._index(match.group(2), dim, number, "bracket")
                vector = self._combination(match.group(3), indent + match.start(3), number, space, dim)
                if i == j:
                    if not vector.is_zero():
                        raise SpecFileError(f"bracket {i + 1} {i + 1} must vanish", number)
                    continue
                key, value = ((i, j), vector) if i < j else ((j, i), -vector)
                if key in brackets:
                    kind = "duplicate" if brackets[key] == value else "conflicting"
                    raise SpecFileError(f"{kind} bracket {key[0] + 1} {key[1] + 1}", number)
                brackets[key] = value
                continue
            match = self.PATTERNS["phi"].match(body)
            if match:
                j = self._index(match.group(1), dim, number, "phi")
                if j in phi_columns:
                    raise SpecFileError(f"duplicate phi {j + 1}", number)
                phi_columns[j] = self._combination(match.group(2), indent + match.start(2), number, space, dim)
                continue
            match = self.PATTERNS["xi"].match(body)
            if match:
                if xi is not None:
                    raise SpecFileError("duplicate xi", number)
                xi = self._combination(match.group(1), indent + match.start(1), number, space, dim)
                continue
            match = self.PATTERNS["eta"].match(body)
            if match:
                if eta is not None:
                    raise SpecFileError("duplicate eta", number)
                eta = self._list(match.group(1), indent + match.start(1), number, space, dim, "eta")
                continue
            match = self.PATTERNS["metric_diag"].match(body)
            if match:
                if diag_line is not None or metric_rows:
                    raise SpecFileError("conflicting metric entries", number)
                values = self._list(match.group(1), indent + match.start(1), number, space, dim, "metric diag")
                for i, value in enumerate(values):
                    metric_rows[i] = [value if k == i else space.zero() for k in range(dim)]
                diag_line = number
                continue
            match = self.PATTERNS["metric_row"].match(body)
            if match:
                i = self._index(match.group(1), dim, number, "metric row")
                if diag_line is not None or i in metric_rows:
                    kind = "conflicting metric entries" if diag_line is not None else f"duplicate metric row {i + 1}"
                    raise SpecFileError(kind, number)
                metric_rows[i] = self._list(match.group(2), indent + match.start(2), number, space, dim, "metric row")
                continue
            raise SpecFileError(f"unknown directive '{body.split()[0]}'", number)

        if xi is None:
            raise SpecFileError("missing xi")
        if eta is None:
            raise SpecFileError("missing eta")
        if len(metric_rows) != dim:
            raise SpecFileError("missing metric" if not metric_rows else "metric rows incomplete")

        return self._assemble(dim, space, brackets, phi_columns, xi, eta, metric_rows)

    def _header(self, lines: List[Tuple[int, str]]) -> Tuple[int, ParamSpace]:
        dim: Optional[int] = None
        names: Optional[List[str]] = None
        for number, line in lines:
            body = line.strip()
            match = self.PATTERNS["dim"].match(body)
            if match:
                if dim is not None:
                    raise SpecFileError("duplicate dim", number)
                if not match.group(1).isdigit():
                    raise SpecFileError(f"dim must be a positive integer, got '{match.group(1)}'", number)
                dim = int(match.group(1))
                if dim % 2 == 0:
                    raise SpecFileError(f"dim not odd: {dim}", number)
                continue
            match = self.PATTERNS["params"].match(body)
            if match:
                if names is not None:
                    raise SpecFileError("duplicate params", number)
                names = [item for item, _ in self.split_list(match.group(1), 0) if item]
                try:
                    ParamSpace(names)
                except ValueError as e:
                    raise SpecFileError(str(e), number)
        if dim is None:
            raise SpecFileError("missing dim")
        return dim, ParamSpace(names or [])

    def _assemble(self, dim: int, space: ParamSpace, brackets: Dict[Tuple[int, int], Vector],
                  phi_columns: Dict[int, Vector], xi: Vector, eta: List[Scalar],
                  metric_rows: Dict[int, List[Scalar]]) -> Fixture:
        alg = LieAlgebraSpec.from_brackets(dim, space, {key: list(v.comps) for key, v in brackets.items()})
        phi = np.empty((dim, dim), dtype=object)
        g = np.empty((dim, dim), dtype=object)
        for i in range(dim):
            for j in range(dim):
                column = phi_columns.get(j)
                phi[i, j] = column[i] if column is not None else space.zero()
                g[i, j] = metric_rows[i][j]
        structure = StructurePack.build(space, phi, xi, eta, g)
        logger.info(f"Parsed spec '{self.name}': dim {dim}, {len(brackets)} nonzero brackets, "
                    f"parameters {list(space.names)}")
        return Fixture(self.name, alg, structure, "parsed spec file")


def parse_spec(text: str, name: str = "custom") -> Fixture:
    return SpecParser(name).parse(text)


def parse_spec_file(path: str | Path) -> Fixture:
    return SpecParser().parse_file(path)
