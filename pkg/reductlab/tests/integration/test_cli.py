"""Integration tests for the reductlab command line"""

import json

import pytest
from click.testing import CliRunner

from reductlab import __version__
from reductlab.cli import RunConfig, main

pytestmark = pytest.mark.integration


@pytest.fixture
def invoke(data_dir):
    """Run a command quietly; data file names are resolved against the data directory"""
    runner = CliRunner()

    def _invoke(*args: str):
        resolved = [str(data_dir / a) if a.endswith(".yaml") and "/" not in a else a for a in args]
        return runner.invoke(main, [*resolved, "--log-level", "CRITICAL"])

    return _invoke


def document(result):
    return json.loads(result.stdout)


class TestRunConfig:
    """Configuration merged with flags"""

    def test_environment_defaults(self):
        settings = RunConfig.from_sources({})
        assert settings.budget == 200000
        assert settings.seed == 7
        assert settings.log_level == "DEBUG"

    def test_flags_win(self):
        settings = RunConfig.from_sources({"budget": 9, "format": "json", "seed": None})
        assert settings.budget == 9
        assert settings.format == "json"
        assert settings.seed == 7

    def test_one_lattice_source(self):
        with pytest.raises(ValueError):
            RunConfig.from_sources({"builtin": "boolean", "lattice": "l.yaml"})


class TestLatticeValidate:
    def test_builtin(self, invoke):
        result = invoke("lattice-validate", "--builtin", "godel(3)", "--format", "json")
        assert result.exit_code == 0
        doc = document(result)
        assert doc["schema"] == "reductlab.lattice-report"
        assert doc["schema_version"] == "1.0.0"
        assert doc["valid"] is True
        assert doc["elements"] == ["0", "1/2", "1"]
        assert doc["dne"] is False
        assert doc["dne_witness"] == "1/2"

    def test_lattice_file(self, invoke):
        result = invoke("lattice-validate", "--lattice", "diamond.yaml", "--format", "json")
        assert result.exit_code == 0
        doc = document(result)
        assert doc["chain"] is False
        assert doc["dne"] is True

    def test_invalid_lattice(self, invoke):
        result = invoke("lattice-validate", "--lattice", "idempotent_unit.yaml", "--format", "json")
        assert result.exit_code == 2
        doc = document(result)
        assert doc["valid"] is False
        assert doc["violation"]["code"] == "join-distributivity"

    def test_missing_file(self, invoke, tmp_path):
        result = invoke("lattice-validate", "--lattice", str(tmp_path / "absent.yaml"))
        assert result.exit_code == 3

    def test_no_source(self, invoke):
        assert invoke("lattice-validate").exit_code == 3

    def test_two_sources(self, invoke):
        assert invoke("lattice-validate", "--builtin", "boolean", "--lattice", "diamond.yaml").exit_code == 3

    def test_text_output(self, invoke):
        result = invoke("lattice-validate", "--builtin", "lukasiewicz(3)")
        assert result.exit_code == 0
        assert "holds" in result.stdout


class TestConcepts:
    def test_counterexample(self, invoke):
        result = invoke("concepts", "--context", "godel3_counterexample.yaml", "--format", "json")
        assert result.exit_code == 0
        doc = document(result)
        assert doc["schema"] == "reductlab.concept-lattice"
        assert doc["concepts"] == [["0", "1/2"], ["0", "1"], ["1", "1"]]

    def test_negated_rst(self, invoke):
        result = invoke(
            "concepts", "--context", "godel3_counterexample.yaml", "--mode", "rst", "--negate", "--format", "json"
        )
        assert document(result)["concepts"] == [["0", "1"], ["1/2", "1"], ["1", "1"]]

    def test_context_with_lattice_file(self, invoke):
        result = invoke("concepts", "--context", "diamond_context.yaml", "--strategy", "naive")
        assert result.exit_code == 0

    def test_malformed_context(self, invoke, tmp_path):
        bad = tmp_path / "bad.yaml"
        bad.write_text("lattice: boolean\nattributes: [a]\nobjects:\n  - [x, \"0\", \"1\"]\n", encoding="utf-8")
        assert invoke("concepts", "--context", str(bad)).exit_code == 3


class TestReductCheck:
    def test_not_an_fca_reduct(self, invoke):
        result = invoke(
            "reduct-check", "--context", "godel3_counterexample.yaml", "--objects", "x", "--attributes", "star"
        )
        assert result.exit_code == 1
        assert "NOT A REDUCT" in result.stdout

    def test_rst_reduct_of_negation(self, invoke):
        result = invoke(
            "reduct-check", "--context", "godel3_counterexample.yaml", "--mode", "rst", "--negate",
            "--objects", "x", "--attributes", "star", "--format", "json",
        )
        assert result.exit_code == 0
        doc = document(result)
        assert doc["schema"] == "reductlab.reduct-report"
        assert doc["verdict"] is True

    def test_omitted_selector_keeps_everything(self, invoke):
        assert invoke("reduct-check", "--context", "godel3_counterexample.yaml").exit_code == 0

    def test_empty_selector(self, invoke):
        assert invoke("reduct-check", "--context", "godel3_counterexample.yaml", "--objects", "").exit_code == 1

    def test_unknown_label(self, invoke):
        result = invoke("reduct-check", "--context", "godel3_counterexample.yaml", "--objects", "x,w")
        assert result.exit_code == 5

    def test_budget(self, invoke):
        result = invoke(
            "reduct-check", "--context", "godel3_counterexample.yaml", "--method", "exhaustive", "--budget", "5"
        )
        assert result.exit_code == 4

    def test_out_file(self, invoke, tmp_path):
        target = tmp_path / "report.json"
        result = invoke(
            "reduct-check", "--context", "godel3_counterexample.yaml", "--objects", "x",
            "--format", "json", "--out", str(target),
        )
        assert result.exit_code == 1
        assert result.stdout == ""
        assert json.loads(target.read_text(encoding="utf-8"))["object_side"]["witness"] == {"star": "1/2"}

    def test_text_out_file(self, invoke, tmp_path):
        target = tmp_path / "report.txt"
        invoke("reduct-check", "--context", "godel3_counterexample.yaml", "--out", str(target))
        assert "REDUCT" in target.read_text(encoding="utf-8")

    @pytest.mark.parametrize("format_", ["json", "text"])
    def test_unwritable_out_file(self, invoke, tmp_path, format_):
        """A write failure is an I/O error even when the verdict is true"""
        target = tmp_path / "missing" / "report.out"
        result = invoke(
            "reduct-check", "--context", "godel3_counterexample.yaml", "--mode", "rst", "--negate",
            "--objects", "x", "--attributes", "star", "--format", format_, "--out", str(target),
        )
        assert result.exit_code == 3
        assert result.exception is None or isinstance(result.exception, SystemExit)
        assert not target.exists()


class TestReductSearch:
    def test_minimal(self, invoke):
        result = invoke("reduct-search", "--context", "duplicate_row.yaml", "--format", "json")
        assert result.exit_code == 0
        doc = document(result)
        assert doc["reducts"] == [
            {"objects": ["p", "r"], "attributes": ["a", "b"]},
            {"objects": ["q", "r"], "attributes": ["a", "b"]},
        ]

    def test_all(self, invoke):
        result = invoke("reduct-search", "--context", "duplicate_row.yaml", "--all", "--format", "json")
        assert len(document(result)["reducts"]) == 3

    def test_negated_rst(self, invoke):
        result = invoke(
            "reduct-search", "--context", "godel3_counterexample.yaml", "--mode", "rst", "--negate", "--format", "json"
        )
        assert document(result)["reducts"] == [{"objects": ["x"], "attributes": ["star"]}]


class TestVerifyTheorem:
    def test_lukasiewicz(self, invoke):
        result = invoke("verify-theorem", "--builtin", "lukasiewicz(3)", "--samples", "10", "--format", "json")
        assert result.exit_code == 0
        doc = document(result)
        assert doc["schema"] == "reductlab.interdefinability-report"
        assert doc["violations"] == []
        assert doc["contexts_checked"] == 10

    def test_godel_witness(self, invoke):
        result = invoke("verify-theorem", "--builtin", "godel(3)", "--format", "json")
        assert result.exit_code == 0
        doc = document(result)
        assert doc["witness_from_construction"] is True
        assert doc["witness"]["selector"] == {"objects": ["x"], "attributes": ["star"]}

    def test_bad_sample_count(self, invoke):
        assert invoke("verify-theorem", "--builtin", "boolean", "--samples", "0").exit_code == 3

    def test_exhaustive_budget(self, invoke):
        result = invoke("verify-theorem", "--builtin", "lukasiewicz(3)", "--exhaustive", "--budget", "100")
        assert result.exit_code == 4


def test_version():
    result = CliRunner().invoke(main, ["--version"])
    assert result.exit_code == 0
    assert __version__ in result.output
