import subprocess
import sys
import time
from pathlib import Path

import orjson as json
import pytest

from src.cli.main import EXIT_CAP, EXIT_FAILED, EXIT_INVALID, EXIT_OK, main, resolve_descriptor
from src.constructions.matrix import _FAMILY_PATTERNS
from src.constructions.table import table_descriptor
from src.core import DescriptorError
from src.log_config.config import configure_logging
from src.models.descriptor import RingKind
from src.suite.catalog import BUILTIN_RINGS

PROJECT_ROOT = Path(__file__).parent.parent


@pytest.fixture(autouse=True)
def reset_logging():
    """main() binds the log handler to the captured stderr; rebind it afterwards."""
    yield
    configure_logging("warning")


def run_json(capsys, argv):
    code = main(argv)
    return code, json.loads(capsys.readouterr().out)


def run_process(*argv: str, timeout: float = 120) -> subprocess.CompletedProcess:
    return subprocess.run([sys.executable, str(PROJECT_ROOT / "start.py"), *argv],
                          cwd=PROJECT_ROOT, capture_output=True, timeout=timeout)


class TestCompute:
    """ringlab compute"""

    def test_local16_qnil(self, capsys):
        code, data = run_json(capsys, ["compute", "--ring", "builtin:local16", "--sets", "qnil"])
        assert code == EXIT_OK
        assert data["schema"] == "ringlab.set-report/1"
        entry = data["sets"][0]
        assert entry["cardinality"] == 8
        assert entry["indexes"] == [0, 1, 2, 3, 8, 9, 10, 11]
        assert set(entry["elements"]) == {"0", "y", "x", "x+y", "2", "2+y", "2+x", "2+x+y"}

    def test_default_sets(self, capsys):
        code, data = run_json(capsys, ["compute", "--ring", "builtin:m2-z2"])
        assert code == EXIT_OK
        assert [(s["name"], s["cardinality"]) for s in data["sets"]] == [("units", 6), ("qnil", 4)]

    def test_commutants(self, capsys):
        code, data = run_json(capsys, ["compute", "--ring", "builtin:m2-z2", "--sets", "comm,double-comm",
                                       "--element", "a11=1"])
        assert code == EXIT_OK
        assert [s["indexes"] for s in data["sets"]] == [[0, 1, 8, 9], [0, 1, 8, 9]]

    def test_commutant_needs_element(self, capsys):
        assert main(["compute", "--ring", "builtin:z4", "--sets", "comm"]) == EXIT_INVALID
        assert "--element" in capsys.readouterr().err

    def test_unknown_set(self):
        assert main(["compute", "--ring", "builtin:z4", "--sets", "socle"]) == EXIT_INVALID

    def test_text_format(self, capsys):
        assert main(["compute", "--ring", "builtin:z4", "--sets", "units", "--format", "text"]) == EXIT_OK
        assert capsys.readouterr().out.splitlines() == ["Z_4 (order 4)", "  units [2]: {1, 3}"]

    def test_out_file(self, tmp_path, capsys):
        target = tmp_path / "reports" / "z4.json"
        assert main(["compute", "--ring", "builtin:z4", "--sets", "qnil", "--out", str(target)]) == EXIT_OK
        assert capsys.readouterr().out == ""
        assert json.loads(target.read_bytes())["sets"][0]["indexes"] == [0, 2]


class TestCheck:
    """ringlab check"""

    def test_witness_included(self, capsys):
        code, data = run_json(capsys, ["check", "--ring", "builtin:local16", "--props",
                                       "right-qnil-duo,local", "--witness"])
        assert code == EXIT_OK
        assert data["axioms"]["status"] == "ok"
        right, local = data["verdicts"]
        assert right["holds"] is False
        assert [(w["role"], w["label"]) for w in right["witness"]] == [("a", "y"), ("b", "x"), ("product", "2")]
        assert local["holds"] is True

    def test_witness_omitted_by_default(self, capsys):
        _, data = run_json(capsys, ["check", "--ring", "builtin:local16", "--props", "right-qnil-duo"])
        assert "witness" not in data["verdicts"][0]
        assert "detail" not in data["verdicts"][0]

    def test_kernel_condition(self, capsys):
        code, data = run_json(capsys, ["check", "--ring", "builtin:k0-z2", "--props", "k0-kernel-condition",
                                       "--element", "0,0,0,0"])
        assert code == EXIT_OK
        assert data["verdicts"][0]["holds"] is True
        assert data["verdicts"][0]["consequence_holds"] is True

    def test_kernel_condition_outside_k0(self):
        assert main(["check", "--ring", "builtin:m2-z2", "--props", "k0-kernel-condition",
                     "--element", "0,0,0,0"]) == EXIT_INVALID

    def test_unknown_predicate(self, capsys):
        assert main(["check", "--ring", "builtin:z4", "--props", "artinian"]) == EXIT_INVALID
        assert "artinian" in capsys.readouterr().err

    def test_text_witness(self, capsys):
        assert main(["check", "--ring", "builtin:local16", "--props", "right-qnil-duo",
                     "--witness", "--format", "text"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "right-qnil-duo  false" in out
        assert "      a = y" in out

    def test_constructions_above_suite_axiom_cap_are_not_scanned(self, restore_settings, capsys):
        restore_settings.suite_axiom_cap = 8
        code, data = run_json(capsys, ["check", "--ring", "builtin:m2-z2", "--props", "abelian"])
        assert code == EXIT_OK
        assert data["axioms"]["status"] == "unchecked"
        assert "built from verified bases" in data["axioms"]["detail"]
        assert data["verdicts"][0]["holds"] is False

    def test_table_rings_are_always_scanned(self, restore_settings, local16, tmp_path, capsys):
        restore_settings.suite_axiom_cap = 8
        path = tmp_path / "local16-table.json"
        path.write_bytes(table_descriptor(local16).dumps())
        code, data = run_json(capsys, ["check", "--ring", str(path), "--props", "local"])
        assert code == EXIT_OK
        assert data["axioms"]["status"] == "ok"
        assert data["verdicts"][0]["holds"] is True


class TestErrors:
    """Exit codes for bad input."""

    def test_order_cap(self, restore_settings, capsys):
        assert main(["compute", "--ring", "builtin:m2-z4", "--order-cap", "100"]) == EXIT_CAP
        assert "order cap" in capsys.readouterr().err

    def test_non_positive_cap(self, restore_settings):
        assert main(["compute", "--ring", "builtin:z4", "--order-cap", "0"]) == EXIT_INVALID

    def test_invalid_inline_descriptor(self):
        assert main(["compute", "--ring", '{"kind": "Mn", "n": 2}']) == EXIT_INVALID

    def test_missing_descriptor_file(self, tmp_path):
        assert main(["compute", "--ring", str(tmp_path / "missing.json")]) == EXIT_INVALID

    def test_unknown_builtin(self):
        assert main(["explain", "--ring", "builtin:m7-z7"]) == EXIT_INVALID

    def test_bad_element_literal(self):
        assert main(["compute", "--ring", "builtin:local16", "--sets", "comm", "--element", "q=1"]) == EXIT_INVALID

    def test_pattern_not_closed(self, mocker, open_pattern, capsys):
        mocker.patch.dict(_FAMILY_PATTERNS, {RingKind.MN: lambda n: open_pattern})
        ring = '{"kind": "Mn", "base": {"kind": "Zn", "n": 7}, "n": 2}'
        assert main(["compute", "--ring", ring]) == EXIT_INVALID
        assert "not closed under multiplication" in capsys.readouterr().err


class TestDescriptorResolution:
    """Descriptor references."""

    def test_file_and_inline(self, tmp_path):
        path = tmp_path / "ring.json"
        path.write_bytes(BUILTIN_RINGS["l01-z4"].dumps())
        assert resolve_descriptor(str(path)) == BUILTIN_RINGS["l01-z4"]
        assert resolve_descriptor('{"kind": "Zn", "n": 4}') == BUILTIN_RINGS["z4"]

    def test_malformed_json(self):
        with pytest.raises(DescriptorError):
            resolve_descriptor("{kind")


class TestExplain:
    """ringlab explain"""

    def test_local16(self, capsys):
        code, data = run_json(capsys, ["explain", "--ring", "builtin:local16"])
        assert code == EXIT_OK
        assert data["kind"] == "Local16"
        assert data["order"] == 16
        assert [(c["name"], c["radix"]) for c in data["coordinates"]] == [("a", 4), ("b", 2), ("c", 2)]
        assert (data["zero"], data["one"]) == ("0", "1")

    def test_skew_notes(self, capsys):
        assert main(["explain", "--ring", "builtin:skew-z2xz2-swap-2", "--format", "text"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "order 64" in out
        assert "note: α acts on the right factor" in out

    def test_reference_is_printed(self, capsys):
        code, data = run_json(capsys, ["explain", "--ring", "builtin:h11-z4"])
        assert code == EXIT_OK
        assert data["paper_ref"] == '§4, "a - d = sc, d - f = te"'
        assert main(["explain", "--ring", "builtin:m2-z2", "--format", "text"]) == EXIT_OK
        assert "  ref: §1, " in capsys.readouterr().out


@pytest.mark.integration
class TestVerify:
    """ringlab verify"""

    def test_selected_case(self, tmp_path, capsys):
        catalog = tmp_path / "catalog.json"
        catalog.write_bytes(json.dumps(["builtin:local16"]))
        code, data = run_json(capsys, ["verify", "--catalog", str(catalog), "--case", "duo.local16-witness",
                                       "--case", "duo.local16-right-qnil-duo", "--stable"])
        assert code == EXIT_OK
        assert data["complete"] is True
        assert data["summary"]["passed"] == 2
        assert all(case["millis"] == 0.0 for case in data["cases"])

    def test_incomplete_catalog_fails(self, tmp_path, capsys):
        catalog = tmp_path / "catalog.json"
        catalog.write_bytes(json.dumps([{"slug": "bad", "descriptor": {"kind": "Zn", "n": 1}}]))
        code = main(["verify", "--catalog", str(catalog), "--case", "catalog.builds", "--format", "text"])
        assert code == EXIT_FAILED
        assert "INCOMPLETE" in capsys.readouterr().out


@pytest.mark.integration
class TestProcess:
    """ringlab as a separate process, as a shell pipeline sees it."""

    def test_stdout_is_pure_json(self):
        result = run_process("compute", "--ring", "builtin:local16", "--sets", "qnil", "--log-level", "debug")
        assert result.returncode == EXIT_OK
        data = json.loads(result.stdout)
        assert data["sets"][0]["cardinality"] == 8
        assert b"Built ring" in result.stderr

    def test_invalid_descriptor_exit_code(self):
        result = run_process("compute", "--ring", '{"kind": "Mn", "n": 2}')
        assert result.returncode == EXIT_INVALID
        assert result.stdout == b""
        assert b"error:" in result.stderr

    def test_l11_right_qnil_duo_within_budget(self):
        start = time.perf_counter()
        result = run_process("check", "--ring", "builtin:l11-z4", "--props", "right-qnil-duo", "--witness")
        elapsed = time.perf_counter() - start
        assert result.returncode == EXIT_OK
        data = json.loads(result.stdout)
        assert data["order"] == 1024
        assert data["axioms"]["status"] == "unchecked"
        verdict = data["verdicts"][0]
        assert verdict["holds"] is False
        assert verdict["witness"]
        assert elapsed < 30
