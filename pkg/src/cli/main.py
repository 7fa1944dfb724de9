"""
Command-line front end: compute sets, check predicates, run the suite, explain rings.
"""
import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence

import orjson as json
import structlog

from src import __version__
from src.checkers import PROPERTY_CHECKERS, evaluate, k0_kernel_condition
from src.config.settings import settings
from src.constructions.manager import construction_manager, parse_descriptor
from src.constructions.table import TableRing
from src.core.axioms import verify_axioms
from src.core.derived import DERIVED_SETS, commutant, double_commutant
from src.core.errors import CapExceededError, DescriptorError, RingLabError
from src.core.ring import FiniteRing
from src.log_config.config import configure_logging
from src.models.descriptor import RingDescriptor
from src.models.report import CoordinateInfo, ElementSetReport, ExplainReport, SetReport, VerdictReport
from src.models.verdict import AxiomReport
from src.suite.catalog import BUILTIN_PREFIX, builtin_descriptor, load_catalog
from src.suite.runner import run_all
from . import render

logger = structlog.get_logger()

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_CAP = 3

ELEMENT_SETS = ("comm", "double-comm")
KERNEL_CONDITION = "k0-kernel-condition"


def _split(raw: Optional[str]) -> List[str]:
    return [part.strip() for part in (raw or "").split(",") if part.strip()]


def resolve_descriptor(ref: str) -> RingDescriptor:
    """``builtin:<slug>``, inline JSON, or a path to a JSON descriptor file."""
    if ref.startswith(BUILTIN_PREFIX):
        return builtin_descriptor(ref)
    if ref.lstrip().startswith("{"):
        raw = ref
    else:
        try:
            raw = Path(ref).read_bytes()
        except OSError as e:
            raise DescriptorError(f"cannot read descriptor {ref}: {e}") from e
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as e:
        raise DescriptorError(f"descriptor {ref} is not valid JSON: {e}") from e
    return parse_descriptor(data)


def load_ring(ref: str) -> FiniteRing:
    return construction_manager.build(resolve_descriptor(ref))


def _emit(args: argparse.Namespace, text: str):
    if args.out:
        path = Path(args.out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text + "\n", encoding="utf-8")
        logger.info("Wrote report", path=str(path))
    else:
        sys.stdout.write(text + "\n")


def cmd_compute(args: argparse.Namespace) -> int:
    names = _split(args.sets) or ["units", "qnil"]
    unknown = [name for name in names if name not in DERIVED_SETS and name not in ELEMENT_SETS]
    if unknown:
        raise DescriptorError(f"unknown set(s) {', '.join(unknown)}; "
                              f"choose from {', '.join(list(DERIVED_SETS) + list(ELEMENT_SETS))}")
    if any(name in ELEMENT_SETS for name in names) and not args.element:
        raise DescriptorError("comm and double-comm need --element")

    ring = load_ring(args.ring)
    element = ring.parse_literal(args.element) if args.element else None
    entries = []
    for name in names:
        if name == "comm":
            subset, label = commutant(ring, element), f"comm({ring.label(element)})"
        elif name == "double-comm":
            subset, label = double_commutant(ring, element), f"comm²({ring.label(element)})"
        else:
            subset, label = DERIVED_SETS[name](ring), name
        entries.append(ElementSetReport(name=label, cardinality=len(subset),
                                        elements=ring.labels(subset.members), indexes=list(subset.members)))
    report = SetReport(ring=ring.name, order=ring.order, sets=entries)
    if args.format == "json":
        _emit(args, render.dump_json(report.model_dump(mode="json", by_alias=True)))
    else:
        _emit(args, render.set_report_text(report))
    return EXIT_OK


def axiom_report(ring: FiniteRing) -> AxiomReport:
    """Full scan for table rings; constructions are scanned only up to the suite axiom cap."""
    if isinstance(ring, TableRing):
        return verify_axioms(ring)
    cap = min(settings.axiom_check_cap, settings.suite_axiom_cap)
    report = verify_axioms(ring, cap=cap)
    if report.status == "unchecked":
        report.detail = f"order {ring.order} above {cap}; built from verified bases"
    return report


def cmd_check(args: argparse.Namespace) -> int:
    names = _split(args.props)
    if not names:
        raise DescriptorError("--props needs at least one predicate")
    unknown = [name for name in names if name not in PROPERTY_CHECKERS and name != KERNEL_CONDITION]
    if unknown:
        raise DescriptorError(f"unknown predicate(s) {', '.join(unknown)}; "
                              f"choose from {', '.join(list(PROPERTY_CHECKERS) + [KERNEL_CONDITION])}")
    if KERNEL_CONDITION in names and not args.element:
        raise DescriptorError(f"{KERNEL_CONDITION} needs --element")

    ring = load_ring(args.ring)
    axioms = axiom_report(ring)
    verdicts = []
    for name in names:
        if name == KERNEL_CONDITION:
            verdicts.append(k0_kernel_condition(ring, ring.parse_literal(args.element)))
        else:
            verdicts.append(evaluate(ring, name))
    report = VerdictReport(ring=ring.name, order=ring.order, axioms=axioms, verdicts=verdicts)
    if args.format == "json":
        _emit(args, render.dump_json(render.verdict_report_json(report, args.witness)))
    else:
        _emit(args, render.verdict_report_text(report, args.witness))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    catalog = load_catalog(args.catalog)
    report = run_all(catalog, workers=args.workers, only=args.case or None)
    data = report.stable_dict() if args.stable else report.model_dump(mode="json", by_alias=True)
    if args.format == "json":
        _emit(args, render.dump_json(data))
    else:
        _emit(args, render.suite_report_text(report))
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_explain(args: argparse.Namespace) -> int:
    descriptor = resolve_descriptor(args.ring)
    builder = construction_manager.builder_for(descriptor)
    ring = construction_manager.build(descriptor)
    report = ExplainReport(
        ring=ring.name,
        kind=descriptor.kind.value,
        order=ring.order,
        formula=ring.formula or builder.formula,
        ref=builder.ref,
        coordinates=[CoordinateInfo(name=name, radix=radix)
                     for name, radix in zip(ring.coordinate_names, ring.radix.radices)],
        zero=ring.label(ring.zero),
        one=ring.label(ring.one),
        notes=list(ring.notes),
    )
    if args.format == "json":
        _emit(args, render.dump_json(report.model_dump(mode="json", by_alias=True)))
    else:
        _emit(args, render.explain_report_text(report))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ringlab", description="Quasinilpotents and qnil-duo rings, exhaustively")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="json")
    common.add_argument("--out", help="Write the report to this file instead of stdout")
    common.add_argument("--order-cap", type=int, help="Largest ring order to realize")
    common.add_argument("--axiom-cap", type=int, help="Largest ring order to scan for ring laws")
    common.add_argument("--table-cap", type=int, help="Largest ring order whose product table is cached")
    common.add_argument("--log-level", choices=["debug", "info", "warning", "error"])

    commands = parser.add_subparsers(dest="command", required=True)

    compute = commands.add_parser("compute", parents=[common], help="Compute derived element sets")
    compute.add_argument("--ring", required=True, help="builtin:<slug>, a descriptor file or inline JSON")
    compute.add_argument("--sets", help="Comma list: " + ", ".join(list(DERIVED_SETS) + list(ELEMENT_SETS)))
    compute.add_argument("--element", help='Element literal in native coordinates, e.g. "a=2,b=1,c=0"')
    compute.set_defaults(handler=cmd_compute)

    check = commands.add_parser("check", parents=[common], help="Evaluate predicates with witnesses")
    check.add_argument("--ring", required=True)
    check.add_argument("--props", required=True, help="Comma list of predicate names")
    check.add_argument("--element", help=f"Element for {KERNEL_CONDITION}")
    check.add_argument("--witness", action="store_true", help="Include witnesses and violated equations")
    check.set_defaults(handler=cmd_check)

    verify = commands.add_parser("verify", parents=[common], help="Run the theorem suite")
    verify.add_argument("--catalog", default="default", help='"default" or a JSON catalog file')
    verify.add_argument("--workers", type=int, help="Cases run in parallel")
    verify.add_argument("--case", action="append", help="Run only this case id (repeatable)")
    verify.add_argument("--stable", action="store_true", help="Zero all timing fields in the JSON report")
    verify.set_defaults(handler=cmd_verify)

    explain = commands.add_parser("explain", parents=[common], help="Show a ring's formula and encoding")
    explain.add_argument("--ring", required=True)
    explain.set_defaults(handler=cmd_explain)
    return parser


def apply_overrides(args: argparse.Namespace):
    for flag, field in (("order_cap", "order_cap"), ("axiom_cap", "axiom_check_cap"), ("table_cap", "table_cap")):
        value = getattr(args, flag, None)
        if value is None:
            continue
        if value < 1:
            raise DescriptorError(f"--{flag.replace('_', '-')} must be a positive integer")
        setattr(settings, field, value)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)

    try:
        apply_overrides(args)
        return args.handler(args)
    except CapExceededError as e:
        logger.error("Order cap exceeded", error=str(e), order=e.order, cap=e.cap)
        sys.stderr.write(f"error: {e}\n")
        return EXIT_CAP
    except (RingLabError, KeyError) as e:
        logger.error("Invalid invocation", error=str(e))
        sys.stderr.write(f"error: {e}\n")
        return EXIT_INVALID
