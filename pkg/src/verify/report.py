"""
Text and machine renderers for suite reports and computed objects
"""
import logging
from typing import Iterable, List, Tuple

from src.classify import lie_class_conditions
from src.exceptions import NotNonAbelianError
from src.levicivita import Connection, killing_check
from src.liealg import format_combination, non_abelian_structure_check
from src.structure import Tensor
from src.verify.models import CheckResult, CheckStatus, SuiteReport

logger = logging.getLogger(__name__)

RULE = "=" * 70
THIN_RULE = "-" * 70
SYMBOLS = {
    CheckStatus.PASS: "✓",
    CheckStatus.FAIL: "✗",
    CheckStatus.HYPOTHESIS_NOT_MET: "○",
}


def _compact(text: str) -> str:
    return text.replace(" ", "")


def _indices(indices: Iterable[int]) -> str:
    return "(" + ",".join(str(i) for i in indices) + ")"


# -- suite reports --------------------------------------------------------------

def machine_line(result: CheckResult) -> str:
    """CHECK <name> <status> [witness=<indices> lhs=<expr> rhs=<expr>] anchor="<ref>\""""
    parts = ["CHECK", result.name, result.status.value]
    if result.witness is not None:
        parts += [f"witness={_indices(result.witness.indices)}",
                  f"lhs={_compact(result.witness.lhs)}", f"rhs={_compact(result.witness.rhs)}"]
    anchor = result.anchor.replace('"', "'")
    parts.append(f'anchor="{anchor}"')
    return " ".join(parts)


def render_machine(report: SuiteReport) -> str:
    return "\n".join(machine_line(result) for result in report.results) + "\n"


def render_text(report: SuiteReport) -> str:
    lines = [RULE, f"Check suite: {report.name}", RULE]
    for result in report.results:
        line = f"{SYMBOLS[result.status]} {result.name}"
        if result.status == CheckStatus.FAIL and result.witness is not None:
            w = result.witness
            line += f"  at {_indices(w.indices)}: lhs {w.lhs} ≠ rhs {w.rhs}"
        elif result.status == CheckStatus.HYPOTHESIS_NOT_MET:
            line += f"  (hypothesis not met: {result.note})"
        lines.append(line)
        if result.status != CheckStatus.HYPOTHESIS_NOT_MET:
            lines.append(f"    {result.anchor}")
            if result.note:
                lines.append(f"    note: {result.note}")
    lines.append(THIN_RULE)
    lines.append(f"passed {report.count(CheckStatus.PASS)}, failed {report.count(CheckStatus.FAIL)}, "
                 f"hypothesis not met {report.count(CheckStatus.HYPOTHESIS_NOT_MET)}")
    return "\n".join(lines) + "\n"


def render_report(report: SuiteReport, output_format: str) -> str:
    return render_machine(report) if output_format == "machine" else render_text(report)


# -- computed objects -------------------------------------------------------

def _pairs(items: List[Tuple[str, str]], output_format: str, title: str) -> str:
    if output_format == "machine":
        return "\n".join(f"{key} {_compact(value)}" for key, value in items) + "\n"
    width = max((len(key) for key, _ in items), default=0)
    lines = [RULE, title, RULE] + [f"{key.ljust(width)}  {value}" for key, value in items]
    return "\n".join(lines) + "\n"


def _connection_items(label: str, conn: Connection) -> List[Tuple[str, str]]:
    items = []
    n = conn.dim
    for i in range(n):
        for j in range(n):
            vector = conn.along(i, j)
            if not vector.is_zero():
                items.append((f"{label} {i + 1} {j + 1}", format_combination(vector.comps)))
    return items


def _tensor_items(label: str, t: Tensor, pairs_increasing: bool = False) -> List[Tuple[str, str]]:
    items = []
    for index, value in t.nonzero_components(canonical=True):
        if pairs_increasing and not (index[0] < index[1] and index[2] < index[3]):
            continue
        items.append((f"{label} " + " ".join(str(i + 1) for i in index), str(value)))
    return items


def render_validation(pipeline, output_format: str) -> str:
    report = pipeline.validation
    jacobi = pipeline.jacobi
    items = [("jacobi", "pass" if jacobi.passed else f"fail at {jacobi.witness}: {jacobi.residual}"),
             ("structure", "pass" if report.passed else "fail")]
    items += [("violation", v) for v in report.violations]
    items += [("note", note) for note in report.notes]
    if report.signature is not None:
        items.append(("signature", f"{report.signature[0]} negative, {report.signature[1]} positive"))
    return _pairs(items, output_format, f"Validation: {pipeline.name}")


def render_classification(pipeline, output_format: str) -> str:
    m = pipeline.membership
    items = [(name, str(getattr(m, name))) for name in ("F0", "F3", "F7", "F3plusF7")]
    items += [
        ("mode", m.mode),
        ("xi_killing", str(killing_check(pipeline.structure, pipeline.nabla))),
        ("norm_nabla_phi", str(pipeline.norm_nabla_phi)),
        ("isotropic_F0", str(pipeline.norm_nabla_phi.is_zero() and not m.F0)),
        ("non_abelian", str(non_abelian_structure_check(pipeline.alg, pipeline.structure))),
    ]
    try:
        conditions = lie_class_conditions(pipeline.alg, pipeline.structure)
        items += [(f"lie_{name}", str(getattr(conditions, name))) for name in ("F3", "F7", "F0")]
    except NotNonAbelianError:
        logger.debug("Bracket conditions skipped: structure is not non-Abelian")
    items += _tensor_items("N", pipeline.N)
    return _pairs(items, output_format, f"Classification: {pipeline.name}")


def render_connection(pipeline, output_format: str) -> str:
    items = _connection_items("nabla", pipeline.nabla)
    if pipeline.has_phikt():
        items += _connection_items("D", pipeline.D)
        items += _tensor_items("T", pipeline.T)
        items.append(("norm_T", str(pipeline.norm_T)))
    else:
        items.append(("phikt", "φKT-connection does not exist: structure is not in F3⊕F7"))
    return _pairs(items, output_format, f"Connections: {pipeline.name}")


def render_curvature(pipeline, output_format: str) -> str:
    items = _tensor_items("R", pipeline.R, pairs_increasing=True)
    items += _tensor_items("rho", pipeline.rho)
    items.append(("tau", str(pipeline.tau)))
    einstein = pipeline.einstein
    items.append(("einstein", str(einstein.passed)))
    items += [("obstruction", str(o)) for o in einstein.obstructions]
    if pipeline.has_phikt():
        items += _tensor_items("K", pipeline.K, pairs_increasing=True)
        items += _tensor_items("rhoD", pipeline.rho_D)
        items.append(("tau_D", str(pipeline.tau_D)))
        items.append(("DT_zero", str(pipeline.DT.is_zero())))
    return _pairs(items, output_format, f"Curvature: {pipeline.name}")
