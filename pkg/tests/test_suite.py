import orjson as json
import pytest

from src.core import DescriptorError
from src.models.report import CaseKind, Outcome
from src.suite import (
    BUILTIN_RINGS,
    Catalog,
    CaseContext,
    CaseRegistry,
    Finding,
    SkipCase,
    TheoremCase,
    case_registry,
    load_catalog,
    run_all,
    run_case,
)
from src.suite.catalog import CatalogItem, builtin_descriptor

FAST_CASES = [
    "catalog.builds",
    "axioms.catalog-rings",
    "qnil.swap",
    "derived.m2-z2",
    "duo.local16-right-qnil-duo",
    "duo.local16-witness",
]


@pytest.fixture
def small_catalog():
    return Catalog([CatalogItem(slug, BUILTIN_RINGS[slug]) for slug in ("z4", "m2-z2", "local16")])


def make_case(check, kind=CaseKind.ASSERTION, skip_reason=None):
    return TheoremCase("test.case", "a statement", kind, ("z4",), check, True, skip_reason)


@pytest.mark.unit
class TestCatalog:
    """Built-in and file catalogs."""

    def test_builtin_catalog(self):
        catalog = Catalog.default()
        assert len(catalog) == 37
        assert catalog.get("local16").descriptor().kind.value == "Local16"
        assert catalog.digest == Catalog.default().digest

    def test_builtin_prefix(self):
        assert builtin_descriptor("builtin:m2-z2") == BUILTIN_RINGS["m2-z2"]
        with pytest.raises(DescriptorError):
            builtin_descriptor("m9-z9")

    def test_load_from_file(self, tmp_path):
        path = tmp_path / "catalog.json"
        path.write_bytes(json.dumps([
            "builtin:z4",
            {"slug": "z5", "descriptor": {"kind": "Zn", "n": 5}},
            {"kind": "Zn", "n": 7},
        ]))
        catalog = load_catalog(path)
        assert [item.slug for item in catalog] == ["z4", "z5", "ring-2"]
        assert catalog.source == str(path)
        assert [entry.name for entry in catalog.manifest()] == ["Z_4", "Z_5", "Z_7"]

    def test_load_rings_key(self, tmp_path):
        path = tmp_path / "catalog.json"
        path.write_bytes(json.dumps({"rings": ["z2", "z3"]}))
        assert len(load_catalog(path)) == 2

    def test_invalid_files(self, tmp_path):
        broken = tmp_path / "broken.json"
        broken.write_text("{not json")
        with pytest.raises(DescriptorError):
            load_catalog(broken)
        with pytest.raises(DescriptorError):
            load_catalog(tmp_path / "missing.json")
        scalar = tmp_path / "scalar.json"
        scalar.write_text("3")
        with pytest.raises(DescriptorError):
            load_catalog(scalar)

    def test_invalid_entry_is_kept_by_slug(self, tmp_path):
        path = tmp_path / "catalog.json"
        path.write_bytes(json.dumps([{"kind": "Mn", "n": 2}]))
        catalog = load_catalog(path)
        assert catalog.manifest()[0].name == "ring-0"

    def test_duplicate_slugs(self):
        items = [CatalogItem("z4", BUILTIN_RINGS["z4"]), CatalogItem("z4", BUILTIN_RINGS["z2"])]
        with pytest.raises(DescriptorError, match="duplicate"):
            Catalog(items)


@pytest.mark.unit
class TestRegistry:
    """Case registration."""

    def test_ids_are_unique_and_prefixed(self):
        cases = case_registry.list_cases()
        ids = [case.case_id for case in cases]
        assert len(ids) == len(set(ids)) == len(case_registry)
        assert ids == sorted(ids)
        assert all("." in case_id for case_id in ids)

    def test_duplicate_registration(self):
        registry = CaseRegistry()
        registry.register("x.one", "statement", ref="derived: x")(lambda ctx: Finding(holds=True))
        with pytest.raises(ValueError):
            registry.register("x.one", "statement", ref="derived: x")(lambda ctx: Finding(holds=True))

    def test_registration_needs_reference(self):
        registry = CaseRegistry()
        with pytest.raises(ValueError, match="needs a reference"):
            registry.register("x.two", "statement", ref="  ")(lambda ctx: Finding(holds=True))
        assert len(registry) == 0

    def test_every_case_has_reference(self):
        references = case_registry.references()
        assert len(references) == len(case_registry)
        assert all(ref.startswith(("§", "derived: ")) for ref in references.values())
        assert references["lst.l11-z4-witness"] == '§4, "such that $BA = AC$"'

    def test_statements(self):
        statements = case_registry.statements()
        assert "duo.local16-witness" in statements
        assert "lst.l11-z4-witness" in statements


@pytest.mark.unit
class TestRunCase:
    """Outcomes of single cases."""

    def test_raising_case_fails(self, small_catalog):
        def check(ctx):
            raise RuntimeError("boom")

        result = run_case(make_case(check), CaseContext(small_catalog))
        assert result.outcome == Outcome.FAIL
        assert result.detail == "RuntimeError: boom"

    def test_raising_observation_is_recorded(self, small_catalog):
        def check(ctx):
            raise RuntimeError("boom")

        result = run_case(make_case(check, kind=CaseKind.OBSERVATION), CaseContext(small_catalog))
        assert result.outcome == Outcome.RECORDED

    def test_skip_reason(self, small_catalog):
        result = run_case(make_case(lambda ctx: Finding(holds=True), skip_reason="degenerate"),
                          CaseContext(small_catalog))
        assert result.outcome == Outcome.SKIPPED
        assert result.detail == "degenerate"

    def test_skip_case_marks_incomplete(self, small_catalog):
        def check(ctx):
            raise SkipCase("ring too large", incomplete=True)

        result = run_case(make_case(check), CaseContext(small_catalog))
        assert result.outcome == Outcome.SKIPPED
        assert result.observations == {"incomplete": True}

    def test_expected_false(self, small_catalog):
        case = TheoremCase("test.case", "a statement", CaseKind.ASSERTION, ("z4",),
                           lambda ctx: Finding(holds=False, detail="no"), False)
        assert run_case(case, CaseContext(small_catalog)).outcome == Outcome.PASS

    def test_unknown_ring_is_skipped(self, small_catalog):
        result = run_case(make_case(lambda ctx: Finding(holds=ctx.ring("nope") is None)),
                          CaseContext(small_catalog))
        assert result.outcome == Outcome.SKIPPED
        assert result.observations == {"incomplete": False}


@pytest.mark.integration
class TestRunAll:
    """Suite runs over small catalogs."""

    def test_selected_cases_pass(self, small_catalog):
        report = run_all(small_catalog, only=FAST_CASES)
        assert [case.case_id for case in report.cases] == sorted(FAST_CASES)
        assert report.summary.failed == 0, [c.detail for c in report.cases if c.outcome == Outcome.FAIL]
        assert report.complete
        assert report.ok
        assert report.catalog_digest == small_catalog.digest
        assert [entry.slug for entry in report.catalog] == ["z4", "m2-z2", "local16"]

    def test_workers_do_not_change_outcomes(self, small_catalog):
        serial = run_all(small_catalog, workers=1, only=FAST_CASES)
        threaded = run_all(small_catalog, workers=3, only=FAST_CASES)
        assert [c.outcome for c in serial.cases] == [c.outcome for c in threaded.cases]

    def test_stable_dict(self, small_catalog):
        data = run_all(small_catalog, only=FAST_CASES).stable_dict()
        assert data["schema"] == "ringlab.suite-report/1"
        assert all(case["paper_ref"] for case in data["cases"])
        assert all(case["millis"] == 0.0 for case in data["cases"])

    def test_failed_build_makes_run_incomplete(self):
        catalog = Catalog([CatalogItem("z4", BUILTIN_RINGS["z4"]), CatalogItem("bad", {"kind": "Zn", "n": 1})])
        report = run_all(catalog, only=["catalog.builds"])
        assert not report.complete
        assert not report.ok
        assert report.cases[0].outcome == Outcome.SKIPPED

    def test_order_cap_skips_large_rings(self):
        catalog = Catalog([CatalogItem("z4", BUILTIN_RINGS["z4"])])
        report = run_all(catalog, order_cap=100, only=["lst.l11-z4-witness"])
        assert report.cases[0].outcome == Outcome.SKIPPED
        assert not report.complete


@pytest.mark.slow
class TestFullSuite:
    """Every case against the built-in catalog."""

    def test_default_catalog(self):
        report = run_all()
        failures = {c.case_id: c.detail for c in report.cases if c.outcome == Outcome.FAIL}
        assert failures == {}
        assert report.complete
        assert report.summary.total == len(case_registry)
