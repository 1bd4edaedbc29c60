"""
Tests for the check registry, suite runner and report rendering
"""
import pytest

from src.fixtures import family_torsion_table, jacobi_violation_fixture, killing_violation_fixture
from src.pipeline import GeometryPipeline
from src.verify import (
    REGISTRY,
    VALIDATION_CHECKS,
    CheckResult,
    CheckStatus,
    SuiteReport,
    Witness,
    machine_line,
    render_classification,
    render_connection,
    render_curvature,
    render_report,
    render_validation,
    run_suite,
    select_checks,
)


@pytest.fixture(scope="module")
def fixc_report(fixc):
    return run_suite(fixc, num_workers=2)


def test_registry_order_starts_with_validation():
    assert tuple(check.name for check in REGISTRY[:3]) == VALIDATION_CHECKS
    assert len({check.name for check in REGISTRY}) == len(REGISTRY)


def test_select_checks():
    assert [c.name for c in select_checks(["structure", "jacobi"])] == ["jacobi", "structure"]
    with pytest.raises(KeyError):
        select_checks(["no_such_check"])


def test_fixc_suite_passes(fixc_report):
    failed = [(r.name, r.witness) for r in fixc_report.results if r.failed]
    assert not failed
    assert fixc_report.get("jacobi").status == CheckStatus.PASS
    assert fixc_report.get("torsion_table").status == CheckStatus.PASS
    assert "sign" in fixc_report.get("torsion_table").note


def test_torsion_table_fails_on_unlisted_sign_flip(fixc, monkeypatch):
    flipped = {index: -value for index, value in family_torsion_table().items()}
    monkeypatch.setattr("src.verify.checks.family_torsion_table", lambda: flipped)
    result = run_suite(fixc, names=["torsion_table"]).get("torsion_table")
    assert result.status == CheckStatus.FAIL
    assert result.witness.indices == (3, 4, 5)


def test_fixc_suite_gates(fixc_report):
    assert fixc_report.get("nijenhuis_F3_vertical").status == CheckStatus.HYPOTHESIS_NOT_MET
    assert fixc_report.get("F3_formula_suite").status == CheckStatus.HYPOTHESIS_NOT_MET
    assert fixc_report.get("einstein_scalar_curvature").status == CheckStatus.HYPOTHESIS_NOT_MET
    assert fixc_report.get("family_einstein_conditions").status == CheckStatus.HYPOTHESIS_NOT_MET
    assert fixc_report.get("KR_DT0").status == CheckStatus.PASS


def test_results_follow_registry_order(fixc_report):
    positions = {check.name: i for i, check in enumerate(REGISTRY)}
    ordered = [positions[r.name] for r in fixc_report.results if r.name in positions]
    assert ordered == sorted(ordered)


def test_symbolic_family_suite(family):
    report = run_suite(family)
    assert not report.any_failed, [r.name for r in report.results if r.failed]
    assert report.get("family_einstein_conditions").status == CheckStatus.PASS
    assert report.get("family_tables").status == CheckStatus.PASS


def test_einstein_instance_suite(einstein):
    report = run_suite(einstein)
    assert not report.any_failed
    assert report.get("einstein_scalar_curvature").status == CheckStatus.PASS
    assert "mu_condition=True" in report.get("family_isotropic_equivalences").note


def test_abelian_suite(abelian):
    report = run_suite(abelian)
    assert not report.any_failed
    assert report.get("family_tables").status == CheckStatus.HYPOTHESIS_NOT_MET


def test_phikt_checks_skipped_outside_class():
    pipeline = GeometryPipeline.from_fixture(killing_violation_fixture())
    report = run_suite(pipeline)
    result = report.get("phikt_naturality")
    assert result.status == CheckStatus.HYPOTHESIS_NOT_MET
    assert "F3⊕F7" in result.note


def test_validation_subset_reports_jacobi_witness():
    pipeline = GeometryPipeline.from_fixture(jacobi_violation_fixture())
    report = run_suite(pipeline, names=VALIDATION_CHECKS, prepare=False)
    jacobi = report.get("jacobi")
    assert jacobi.status == CheckStatus.FAIL
    assert jacobi.witness == Witness(indices=(1, 2, 3, 3), lhs="-1", rhs="0")
    assert report.get("structure").status == CheckStatus.PASS


def test_machine_line():
    result = CheckResult(name="R_bianchi", status=CheckStatus.FAIL, anchor='first "Bianchi"',
                         witness=Witness(indices=(1, 2, 5), lhs="m1 + 1", rhs="0"))
    assert machine_line(result) == "CHECK R_bianchi fail witness=(1,2,5) lhs=m1+1 rhs=0 anchor=\"first 'Bianchi'\""
    passed = CheckResult(name="jacobi", status=CheckStatus.PASS, anchor="J")
    assert machine_line(passed) == 'CHECK jacobi pass anchor="J"'


def test_text_report_summary():
    report = SuiteReport(name="demo", results=[
        CheckResult(name="a", status=CheckStatus.PASS, anchor="x = x"),
        CheckResult(name="b", status=CheckStatus.HYPOTHESIS_NOT_MET, anchor="y", note="ξ is not Killing"),
    ])
    text = render_report(report, "text")
    assert "✓ a" in text
    assert "○ b  (hypothesis not met: ξ is not Killing)" in text
    assert text.rstrip().endswith("passed 1, failed 0, hypothesis not met 1")
    assert render_report(report, "machine").count("\n") == 2


def test_object_renderers(fixc):
    assert "jacobi pass" in render_validation(fixc, "machine")
    classification = render_classification(fixc, "machine")
    assert "F7 True" in classification
    assert "N 1 2 5 -4" in classification
    connection = render_connection(fixc, "machine")
    assert "nabla 1 2 -E1+E5" in connection
    assert "T 1 2 5 -2" in connection
    curvature = render_curvature(fixc, "machine")
    assert "R 1 2 1 2 4" in curvature
    assert "tau -12" in curvature
    assert "tau_D -24" in curvature


def test_connection_renderer_outside_class():
    pipeline = GeometryPipeline.from_fixture(killing_violation_fixture())
    assert "does not exist" in render_connection(pipeline, "text")
