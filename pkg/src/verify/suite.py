"""
Run the registered checks concurrently and collect them in registry order
"""
import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Dict, List, Optional, Sequence

from tqdm import tqdm

from config.settings import settings
from src.verify import checks  # noqa: F401  (populates the registry)
from src.verify.models import CheckResult, SuiteReport
from src.verify.registry import REGISTRY, Check, evaluate

logger = logging.getLogger(__name__)


def select_checks(names: Optional[Sequence[str]] = None) -> List[Check]:
    if names is None:
        return list(REGISTRY)
    known = {check.name: check for check in REGISTRY}
    unknown = [name for name in names if name not in known]
    if unknown:
        raise KeyError(f"unknown checks: {unknown}")
    return [check for check in REGISTRY if check.name in set(names)]


def run_suite(pipeline, names: Optional[Sequence[str]] = None, prepare: bool = True,
              num_workers: Optional[int] = None, show_progress: Optional[bool] = None) -> SuiteReport:
    """Evaluate registered checks against a pipeline

    Args:
        pipeline: GeometryPipeline for the input
        names: subset of check names (default: the whole registry)
        prepare: compute every pipeline object before the checks start
        num_workers: thread pool size (default from settings)
        show_progress: tqdm progress bar (default from settings)

    Returns:
        SuiteReport with results in registry order
    """
    num_workers = num_workers or settings.NUM_WORKERS
    show_progress = settings.SHOW_PROGRESS if show_progress is None else show_progress
    selected = select_checks(names)
    if prepare:
        pipeline.prepare(show_progress=show_progress)

    logger.info(f"Running {len(selected)} checks on '{pipeline.name}' with {num_workers} workers...")
    collected: Dict[int, List[CheckResult]] = {}
    with ThreadPoolExecutor(max_workers=num_workers) as executor:
        futures = {executor.submit(evaluate, check, pipeline): position for position, check in enumerate(selected)}
        for future in tqdm(as_completed(futures), total=len(futures), desc="Checks", disable=not show_progress):
            collected[futures[future]] = future.result()

    results = [result for position in sorted(collected) for result in collected[position]]
    report = SuiteReport(name=pipeline.name, results=results)
    logger.info(f"Suite finished: {len(results)} results, failures: {report.any_failed}")
    return report
