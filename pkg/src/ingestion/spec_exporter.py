"""
Spec file exporter, the inverse of SpecParser
"""
import logging
from pathlib import Path
from typing import List, Optional

from config.settings import settings
from src.fixtures import Fixture
from src.liealg import format_combination

logger = logging.getLogger(__name__)


class SpecExporter:
    """Render a fixture as spec file text"""

    def __init__(self, separator: Optional[str] = None):
        self.separator = settings.LIST_SEPARATOR if separator is None else separator

    def _list(self, values) -> str:
        return self.separator.join(str(value) for value in values)

    def render(self, fixture: Fixture) -> str:
        alg, s = fixture.alg, fixture.structure
        n = alg.dim
        lines: List[str] = [f"# {fixture.name}: {fixture.description}" if fixture.description else f"# {fixture.name}"]
        lines.append(f"dim {n}")
        if alg.params.size:
            lines.append(f"params {self._list(alg.params.names)}")

        for i, j, vector in alg.nonzero_brackets():
            lines.append(f"bracket {i + 1} {j + 1} = {format_combination(vector.comps, 'e')}")
        for j in range(n):
            column = s.phi_basis(j)
            if not column.is_zero():
                lines.append(f"phi {j + 1} = {format_combination(column.comps, 'e')}")
        lines.append(f"xi = {format_combination(s.xi.comps, 'e')}")
        lines.append(f"eta = {self._list(s.eta)}")

        diagonal = all(s.g[i, j].is_zero() for i in range(n) for j in range(n) if i != j)
        if diagonal:
            lines.append(f"metric diag {self._list(s.g[i, i] for i in range(n))}")
        else:
            for i in range(n):
                lines.append(f"metric row {i + 1} {self._list(s.g[i, :])}")
        return "\n".join(lines) + "\n"

    def export(self, fixture: Fixture, path: str | Path) -> Path:
        """Write the spec file and return its path"""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.render(fixture), encoding="utf-8")
        logger.info(f"Exported '{fixture.name}' to {path}")
        return path


def export_spec(fixture: Fixture, path: str | Path) -> Path:
    return SpecExporter().export(fixture, path)
