"""
JSON and aligned-text rendering of CLI reports.
"""
from typing import Any, Dict, List

import orjson as json

from src.models.report import ExplainReport, Outcome, SetReport, SuiteReport, VerdictReport


def dump_json(data: Dict[str, Any]) -> str:
    return json.dumps(data, option=json.OPT_INDENT_2).decode()


def _columns(rows: List[List[str]]) -> List[str]:
    if not rows:
        return []
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in rows]


def set_report_text(report: SetReport) -> str:
    lines = [f"{report.ring} (order {report.order})"]
    for entry in report.sets:
        lines.append(f"  {entry.name} [{entry.cardinality}]: {{" + ", ".join(entry.elements) + "}")
    return "\n".join(lines)


def verdict_report_text(report: VerdictReport, with_witness: bool = False) -> str:
    lines = [f"{report.ring} (order {report.order})"]
    if report.axioms is not None:
        axioms = f"  axioms: {report.axioms.status}"
        if report.axioms.law:
            axioms += f" ({report.axioms.law} at {report.axioms.triple})"
        lines.append(axioms)
    rows = [[verdict.predicate, "true" if verdict.holds else "false"] for verdict in report.verdicts]
    for line, verdict in zip(_columns(rows), report.verdicts):
        lines.append("  " + line)
        if with_witness and verdict.witness:
            for element in verdict.witness:
                lines.append(f"      {element.role} = {element.label}")
        if with_witness and verdict.detail:
            lines.append(f"      {verdict.detail}")
    return "\n".join(lines)


def verdict_report_json(report: VerdictReport, with_witness: bool = False) -> Dict[str, Any]:
    data = report.model_dump(mode="json", by_alias=True)
    if not with_witness:
        for verdict in data["verdicts"]:
            verdict.pop("witness", None)
            verdict.pop("detail", None)
    return data


_MARKS = {Outcome.PASS: "PASS", Outcome.FAIL: "FAIL", Outcome.SKIPPED: "SKIP", Outcome.RECORDED: "NOTE"}


def suite_report_text(report: SuiteReport) -> str:
    rows = [[_MARKS[case.outcome], case.case_id, case.kind.value] for case in report.cases]
    lines = []
    for line, case in zip(_columns(rows), report.cases):
        lines.append(line)
        if case.outcome in (Outcome.FAIL, Outcome.SKIPPED) and case.detail:
            lines.append(f"      {case.detail}")
    summary = report.summary
    lines.append("")
    lines.append(f"{summary.total} cases: {summary.passed} passed, {summary.failed} failed, "
                 f"{summary.skipped} skipped, {summary.recorded} recorded")
    lines.append(f"catalog {report.catalog_digest[:12]} ({len(report.catalog)} rings), "
                 f"{'complete' if report.complete else 'INCOMPLETE'}")
    return "\n".join(lines)


def explain_report_text(report: ExplainReport) -> str:
    coordinates = ", ".join(f"{c.name} ∈ 0..{c.radix - 1}" for c in report.coordinates)
    lines = [
        f"{report.ring}  [{report.kind}, order {report.order}]",
        f"  {report.formula}",
        f"  ref: {report.ref}",
        f"  coordinates: {coordinates}",
        f"  zero = {report.zero}, one = {report.one}",
    ]
    lines.extend(f"  note: {note}" for note in report.notes)
    return "\n".join(lines)
