"""
Tests for the spec file parser and exporter, including the golden spec files
"""
from pathlib import Path

import pytest

from src.exact import ParamSpace
from src.exceptions import (
    DegenerateMetricError,
    ExpressionSyntaxError,
    SpecFileError,
    UnknownIdentifierError,
)
from src.fixtures import FIXTURES
from src.ingestion import SpecExporter, export_spec, parse_combination, parse_spec, parse_spec_file
from src.liealg import jacobi_check
from src.structure import validate_structure

SPECS_DIR = Path(__file__).parent.parent / "specs"

HEADER = """dim 3
phi 1 = e2
phi 2 = -e1
xi = e3
eta = 0, 0, 1
metric diag 1, -1, 1
"""


def spec_with(*extra: str) -> str:
    return HEADER + "".join(line + "\n" for line in extra)


class TestParseCombination:
    def test_linear_terms(self):
        space = ParamSpace(["a"])
        vector = parse_combination("a*e1 - 2*e3 + e1", space, 3)
        assert vector[0] == space.var("a") + 1
        assert vector[1].is_zero()
        assert vector[2] == -2

    def test_rejects_nonlinear_terms(self):
        with pytest.raises(ExpressionSyntaxError, match="not a linear combination"):
            parse_combination("e1*e2", ParamSpace(), 3)
        with pytest.raises(ExpressionSyntaxError, match="not a linear combination"):
            parse_combination("e1 + 1", ParamSpace(), 3)

    def test_rejects_clashing_parameter(self):
        with pytest.raises(ExpressionSyntaxError):
            parse_combination("e1", ParamSpace(["e1"]), 3)


class TestSpecParser:
    def test_minimal_spec(self):
        fixture = parse_spec(spec_with("bracket 1 2 = e3"), name="tiny")
        assert fixture.name == "tiny"
        assert fixture.alg.dim == 3
        assert fixture.alg.basis_bracket(1, 0) == -fixture.alg.basis_bracket(0, 1)
        assert validate_structure(fixture.alg, fixture.structure).passed

    def test_reversed_bracket_is_negated(self):
        fixture = parse_spec(spec_with("bracket 2 1 = e3"))
        assert fixture.alg.basis_bracket(0, 1)[2] == -1

    def test_whitespace_separated_lists_and_comments(self):
        text = HEADER.replace("eta = 0, 0, 1", "eta = 0 0 1  # covector").replace(
            "metric diag 1, -1, 1", "metric row 1 1 0 0\nmetric row 2 0 -1 0\nmetric row 3 0 0 1")
        fixture = parse_spec(text)
        assert fixture.structure.g[1, 1] == -1

    def test_parameters(self):
        fixture = parse_spec("params a\n" + spec_with("bracket 1 2 = a*e3"))
        assert fixture.alg.params.names == ("a",)
        assert jacobi_check(fixture.alg).passed

    @pytest.mark.parametrize("extra, message", [
        ("dim 3", "duplicate dim"),
        ("bracket 1 1 = e2", "must vanish"),
        ("bracket 1 4 = e2", "out of range"),
        ("phi 1 = e3", "duplicate phi"),
        ("xi = e3", "duplicate xi"),
        ("frobnicate 1", "unknown directive"),
        ("metric row 1 1, 0, 0", "conflicting metric"),
    ])
    def test_structural_errors(self, extra, message):
        with pytest.raises(SpecFileError, match=message):
            parse_spec(spec_with(extra))

    def test_conflicting_brackets(self):
        with pytest.raises(SpecFileError, match="conflicting bracket"):
            parse_spec(spec_with("bracket 1 2 = e3", "bracket 2 1 = e3"))
        with pytest.raises(SpecFileError, match="duplicate bracket"):
            parse_spec(spec_with("bracket 1 2 = e3", "bracket 2 1 = -e3"))

    def test_even_dimension(self):
        with pytest.raises(SpecFileError, match="dim not odd"):
            parse_spec("dim 4\n")

    @pytest.mark.parametrize("missing", ["xi", "eta", "metric"])
    def test_missing_sections(self, missing):
        text = "\n".join(line for line in HEADER.splitlines() if not line.startswith(missing))
        with pytest.raises(SpecFileError, match=f"missing {missing}"):
            parse_spec(text)

    def test_missing_dim(self):
        with pytest.raises(SpecFileError, match="missing dim"):
            parse_spec("xi = e1\n")

    def test_wrong_list_length(self):
        with pytest.raises(SpecFileError, match="needs 3 entries"):
            parse_spec(HEADER.replace("eta = 0, 0, 1", "eta = 0, 1"))

    def test_expression_error_position(self):
        with pytest.raises(UnknownIdentifierError) as excinfo:
            parse_spec(spec_with("bracket 1 2 = q*e3"))
        assert excinfo.value.line == 7
        assert excinfo.value.column == 15

    def test_error_reports_line(self):
        with pytest.raises(SpecFileError) as excinfo:
            parse_spec(spec_with("bracket 1 2 = e3", "frobnicate"))
        assert excinfo.value.line == 8

    def test_degenerate_metric(self):
        with pytest.raises(DegenerateMetricError):
            parse_spec(HEADER.replace("metric diag 1, -1, 1", "metric diag 1, 0, 1"))

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            parse_spec_file(tmp_path / "absent.acbm")

    def test_sample_spec(self):
        fixture = parse_spec_file(SPECS_DIR / "heisenberg.acbm")
        assert fixture.name == "heisenberg"
        assert [(i, j) for i, j, _ in fixture.alg.nonzero_brackets()] == [(0, 1)]


class TestSpecExporter:
    @pytest.mark.parametrize("name", ["family", "fixc", "einstein", "abelian"])
    def test_golden_files(self, name, golden_dir, regold):
        text = SpecExporter(separator=", ").render(FIXTURES[name]())
        golden = golden_dir / f"{name}.acbm"
        if regold:
            golden.write_text(text, encoding="utf-8")
        assert golden.read_text(encoding="utf-8") == text

    @pytest.mark.parametrize("name", ["family", "fixc", "abelian"])
    def test_parse_export_round_trip(self, name, tmp_path):
        fixture = FIXTURES[name]()
        path = export_spec(fixture, tmp_path / f"{name}.acbm")
        parsed = parse_spec_file(path)
        assert parsed.alg.params == fixture.alg.params
        assert (parsed.alg.c == fixture.alg.c).all()
        assert (parsed.structure.phi == fixture.structure.phi).all()
        assert (parsed.structure.g == fixture.structure.g).all()
        assert parsed.structure.xi == fixture.structure.xi
        assert parsed.structure.eta == fixture.structure.eta

    def test_non_diagonal_metric_uses_rows(self, tmp_path):
        fixture = parse_spec(HEADER.replace("metric diag 1, -1, 1",
                                            "metric row 1 0, 1, 0\nmetric row 2 1, 0, 0\nmetric row 3 0, 0, 1"))
        text = SpecExporter(separator=", ").render(fixture)
        assert "metric row 1 0, 1, 0" in text
        assert "metric diag" not in text
