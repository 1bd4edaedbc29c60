"""
Tests for the command line entry point
"""
from fractions import Fraction
from pathlib import Path

import pytest

import main
from main import EXIT_INPUT_ERROR, EXIT_OK, parse_params

SAMPLE_SPEC = Path(__file__).parent.parent / "specs" / "heisenberg.acbm"


def run(capsys, *argv):
    code = main.main(list(argv))
    return code, capsys.readouterr()


def test_parse_params():
    assert parse_params("l1=1,m1=1/2") == {"l1": 1, "m1": Fraction(1, 2)}
    assert parse_params("") == {}
    with pytest.raises(ValueError):
        parse_params("l1")


def test_validate_spec_file(capsys):
    code, out = run(capsys, "validate", str(SAMPLE_SPEC), "--format", "machine")
    assert code == EXIT_OK
    assert "jacobi pass" in out.out


def test_classify_fixture_with_params(capsys):
    code, out = run(capsys, "classify", "family", "--params", "l1=1,m1=1", "--format", "machine")
    assert code == EXIT_OK
    assert "F7 True" in out.out


def test_curvature_text(capsys):
    code, out = run(capsys, "curvature", "fixc")
    assert code == EXIT_OK
    assert "Curvature: fixc" in out.out


def test_verify_machine(capsys):
    code, out = run(capsys, "verify", "fixc", "--format", "machine")
    assert code == EXIT_OK
    lines = out.out.splitlines()
    assert lines[0].startswith("CHECK jacobi pass")
    assert all(line.startswith("CHECK ") for line in lines)


def test_invalid_input_exits_2(capsys, tmp_path):
    spec = tmp_path / "bad.acbm"
    spec.write_text("dim 3\nbracket 1 2 = e3\nbracket 1 3 = e2\nbracket 2 3 = e2\n"
                    "phi 1 = e2\nphi 2 = -e1\nxi = e3\neta = 0, 0, 1\nmetric diag 1, -1, 1\n", encoding="utf-8")
    code, out = run(capsys, "connection", str(spec))
    assert code == EXIT_INPUT_ERROR
    assert "Jacobi identity fails" in out.err


def test_validate_reports_failure(capsys, tmp_path):
    spec = tmp_path / "bad.acbm"
    spec.write_text("dim 3\nbracket 1 2 = e3\nbracket 1 3 = e2\nbracket 2 3 = e2\n"
                    "phi 1 = e2\nphi 2 = -e1\nxi = e3\neta = 0, 0, 1\nmetric diag 1, -1, 1\n", encoding="utf-8")
    code, out = run(capsys, "validate", str(spec), "--format", "machine")
    assert code == EXIT_INPUT_ERROR
    assert "jacobi fail" in out.out


def test_validate_structure_violation_exits_2(capsys, tmp_path):
    spec = tmp_path / "riemannian.acbm"
    text = SAMPLE_SPEC.read_text(encoding="utf-8")
    spec.write_text(text.replace("metric diag 1, 1, -1, -1, 1", "metric diag 1, 1, 1, 1, 1"), encoding="utf-8")
    code, out = run(capsys, "validate", str(spec), "--format", "machine")
    assert code == EXIT_INPUT_ERROR
    assert "jacobi pass" in out.out
    assert "structure fail" in out.out


def test_parse_error_exits_2(capsys, tmp_path):
    spec = tmp_path / "broken.acbm"
    spec.write_text("dim 4\n", encoding="utf-8")
    code, out = run(capsys, "validate", str(spec))
    assert code == EXIT_INPUT_ERROR
    assert "dim not odd" in out.err


def test_unknown_parameter_exits_2(capsys):
    code, _ = run(capsys, "classify", "fixc", "--params", "zz=1")
    assert code == EXIT_INPUT_ERROR


def test_export(capsys, tmp_path, golden_dir):
    target = tmp_path / "out" / "abelian.acbm"
    code, out = run(capsys, "export", "abelian", str(target))
    assert code == EXIT_OK
    assert "✓ Exported abelian" in out.out
    assert target.read_text(encoding="utf-8") == (golden_dir / "abelian.acbm").read_text(encoding="utf-8")


def test_no_command_prints_help(capsys):
    code, out = run(capsys)
    assert code == EXIT_INPUT_ERROR
    assert "usage: acbm" in out.out
