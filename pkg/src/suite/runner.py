"""
Suite execution: run registered cases against a catalog and assemble the report.
"""
import time
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

import structlog

from src import __version__
from src.config.settings import settings
from src.models.report import CaseKind, CaseResult, Outcome, SuiteReport, SuiteSummary
from . import cases  # noqa: F401
from .case import CaseContext, Finding, SkipCase, TheoremCase, case_registry
from .catalog import Catalog

logger = structlog.get_logger()


def _outcome(case: TheoremCase, finding: Finding) -> Outcome:
    if case.kind == CaseKind.OBSERVATION:
        return Outcome.RECORDED
    return Outcome.PASS if finding.holds == case.expected else Outcome.FAIL


def run_case(case: TheoremCase, ctx: CaseContext) -> CaseResult:
    """Run one case. Never raises; errors inside a case become a failed outcome."""
    result = CaseResult(case_id=case.case_id, ref=case.ref, statement=case.statement, kind=case.kind,
                        outcome=Outcome.SKIPPED, inputs=list(case.inputs))
    if case.skip_reason:
        result.detail = case.skip_reason
        return result

    start = time.perf_counter()
    try:
        finding = case.check(ctx)
        result.outcome = _outcome(case, finding)
        result.detail = finding.detail
        result.witness = finding.witness
        result.observations = finding.observations
    except SkipCase as e:
        result.detail = e.reason
        result.observations = {"incomplete": e.incomplete}
        logger.warning("Case skipped", case_id=case.case_id, reason=e.reason)
    except Exception as e:
        result.outcome = Outcome.RECORDED if case.kind == CaseKind.OBSERVATION else Outcome.FAIL
        result.detail = f"{type(e).__name__}: {e}"
        logger.error("Case raised", case_id=case.case_id, error=str(e))
    result.millis = round((time.perf_counter() - start) * 1000, 3)

    if result.outcome == Outcome.FAIL:
        logger.warning("Case failed", case_id=case.case_id, detail=result.detail)
    else:
        logger.debug("Case finished", case_id=case.case_id, outcome=result.outcome.value, millis=result.millis)
    return result


def _summarize(results: List[CaseResult]) -> SuiteSummary:
    summary = SuiteSummary(total=len(results))
    for result in results:
        if result.outcome == Outcome.PASS:
            summary.passed += 1
        elif result.outcome == Outcome.FAIL:
            summary.failed += 1
        elif result.outcome == Outcome.SKIPPED:
            summary.skipped += 1
        else:
            summary.recorded += 1
    return summary


def run_all(catalog: Optional[Catalog] = None, workers: Optional[int] = None,
            order_cap: Optional[int] = None, only: Optional[List[str]] = None) -> SuiteReport:
    """
    Run every registered case (or the ``only`` ids) against a catalog.

    Args:
        catalog: Ring catalog, the built-in one by default
        workers: Thread count; cases are independent
        order_cap: Largest ring order any case may build
        only: Restrict the run to these case ids

    Returns:
        SuiteReport ordered by case id
    """
    catalog = catalog or Catalog.default()
    workers = workers or settings.suite_workers
    selected = case_registry.list_cases()
    if only is not None:
        selected = [case_registry.get(case_id) for case_id in sorted(set(only))]

    ctx = CaseContext(catalog, order_cap=order_cap)
    ctx.prepare()
    logger.info("Running theorem suite", cases=len(selected), rings=len(catalog), workers=workers)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda case: run_case(case, ctx), selected))
    else:
        results = [run_case(case, ctx) for case in selected]
    results.sort(key=lambda r: r.case_id)

    incomplete = bool(ctx.failures) or any(r.observations.get("incomplete") for r in results
                                           if r.outcome == Outcome.SKIPPED)
    summary = _summarize(results)
    report = SuiteReport(
        engine_version=__version__,
        catalog_digest=catalog.digest,
        catalog=catalog.manifest(),
        complete=not incomplete,
        cases=results,
        summary=summary,
    )
    logger.info("Theorem suite finished", passed=summary.passed, failed=summary.failed,
                skipped=summary.skipped, recorded=summary.recorded, complete=report.complete)
    return report
