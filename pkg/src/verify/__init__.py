"""Check registry, suite runner and report rendering"""
from .models import CheckResult, CheckStatus, SuiteReport, Witness
from .registry import REGISTRY, Check, Outcome, evaluate, register
from .checks import VALIDATION_CHECKS
from .suite import run_suite, select_checks
from .report import (
    machine_line,
    render_classification,
    render_connection,
    render_curvature,
    render_machine,
    render_report,
    render_text,
    render_validation,
)

__all__ = [
    "CheckResult",
    "CheckStatus",
    "SuiteReport",
    "Witness",
    "REGISTRY",
    "Check",
    "Outcome",
    "evaluate",
    "register",
    "VALIDATION_CHECKS",
    "run_suite",
    "select_checks",
    "machine_line",
    "render_classification",
    "render_connection",
    "render_curvature",
    "render_machine",
    "render_report",
    "render_text",
    "render_validation",
]
