"""Tests for the FCA/RST interdefinability check"""

import pytest
from pydantic import ValidationError
from rich.table import Table

from reductlab.context import SubcontextSelector
from reductlab.derivation import Method
from reductlab.errors import BudgetExceededError
from reductlab.infrastructure.monitoring import metrics
from reductlab.lattice import builtin_chain
from reductlab.reduct import SamplerConfig, compare_context, counterexample_context, verify_interdefinability


class TestSamplerConfig:
    def test_defaults(self):
        config = SamplerConfig(seed=7)
        assert config.samples == 200
        assert config.max_objects == config.max_attributes == 3
        assert not config.exhaustive

    @pytest.mark.parametrize(
        "fields",
        [
            {"seed": 1, "samples": 0},
            {"seed": 1, "max_objects": 0},
            {"seed": 1, "budget": 0},
            {"seed": 1, "colour": "blue"},
            {"samples": 5},
        ],
    )
    def test_rejects_bad_fields(self, fields):
        with pytest.raises(ValidationError):
            SamplerConfig(**fields)


class TestCompareContext:
    def test_counterexample_disagrees_only_on_one_selector(self, counterexample):
        checked, found = compare_context(counterexample, 0, Method.AUTO, 10_000)
        assert checked == 8
        assert len(found) == 1
        assert found[0].selector == SubcontextSelector((0,), (0,))
        assert found[0].fca_reduct is False
        assert found[0].rst_reduct_of_negation is True

    def test_construction_matches_fixture(self, godel3, counterexample):
        assert counterexample_context(godel3, 1).phi.tolist() == counterexample.phi.tolist()


class TestVerifyInterdefinability:
    """Behaviour with and without double negation"""

    @pytest.mark.parametrize("flavour", ["lukasiewicz", "boolean"])
    def test_no_violations_with_double_negation(self, flavour):
        lattice = builtin_chain(2, "godel") if flavour == "boolean" else builtin_chain(3, flavour)
        report = verify_interdefinability(lattice, SamplerConfig(seed=11, samples=25))
        assert report.dne
        assert report.violations == []
        assert report.consistent
        assert report.contexts_checked == 25

    def test_metrics_count_contexts(self, luk3):
        verify_interdefinability(luk3, SamplerConfig(seed=3, samples=5))
        counters = metrics.snapshot()["counters"]
        assert counters[f"theorem_contexts{{lattice={luk3.label}}}"] == 5

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_godel_chains_give_a_witness_from_construction(self, n):
        report = verify_interdefinability(builtin_chain(n, "godel"), SamplerConfig(seed=1, samples=10))
        assert not report.dne
        assert report.consistent
        assert report.witness_from_construction
        assert report.contexts_checked == 1
        assert report.witness.selector == SubcontextSelector((0,), (0,))
        assert report.witness.fca_reduct is False
        assert report.witness.rst_reduct_of_negation is True

    def test_exhaustive_sweep(self, boolean):
        config = SamplerConfig(seed=0, exhaustive=True, max_objects=2, max_attributes=2)
        report = verify_interdefinability(boolean, config)
        assert report.strategy == "exhaustive"
        assert report.contexts_checked == 2 + 4 + 4 + 16
        assert report.consistent

    def test_exhaustive_sweep_budget(self, luk3):
        config = SamplerConfig(seed=0, exhaustive=True, budget=1000)
        with pytest.raises(BudgetExceededError):
            verify_interdefinability(luk3, config)

    def test_document_and_render(self, godel3):
        report = verify_interdefinability(godel3, SamplerConfig(seed=1))
        doc = report.to_document()
        assert doc["dne"] is False
        assert doc["dne_witness"] == "1/2"
        assert doc["witness"]["selector"] == {"objects": ["x"], "attributes": ["star"]}
        assert doc["witness"]["context"]["objects"] == [["x", "0"], ["y", "1/2"]]
        table = report.render()
        assert isinstance(table, Table)
        assert table.caption == "consistent"
