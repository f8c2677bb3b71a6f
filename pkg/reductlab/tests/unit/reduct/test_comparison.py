"""Tests for comparison maps and the isomorphism check"""

from itertools import combinations

import pytest

from reductlab.context import LSubset, SubcontextSelector, negate_context, restrict, restrict_subset
from reductlab.derivation import Mode, enumerate_concepts
from reductlab.errors import NotAConceptError, TagModeMismatchError
from reductlab.reduct import ComparisonMapTag, comparison_map, is_reduct, verify_iso_via_maps


def some_selectors(ctx):
    """Every selector dropping at most one object and one attribute"""
    n_objects, n_attributes = ctx.shape
    objects = [tuple(range(n_objects))] + [c for c in combinations(range(n_objects), n_objects - 1)]
    attributes = [tuple(range(n_attributes))] + [c for c in combinations(range(n_attributes), n_attributes - 1)]
    return [SubcontextSelector(o, a) for o in objects for a in attributes]


class TestComparisonMapTag:
    """Tag metadata"""

    def test_modes_and_directions(self):
        assert ComparisonMapTag.R1.mode is Mode.FCA
        assert ComparisonMapTag.F2.mode is Mode.RST
        assert ComparisonMapTag.S1.direction == "forward"
        assert ComparisonMapTag.E2.direction == "backward"
        assert ComparisonMapTag.E2.variant == 2

    def test_for_mode(self):
        assert [t.value for t in ComparisonMapTag.for_mode(Mode.RST)] == ["S1", "S2", "F1", "F2"]


class TestComparisonMap:
    """Single evaluations"""

    @pytest.mark.parametrize("tag", list(ComparisonMapTag))
    def test_full_selector_gives_identity(self, seeded_corpus, tag):
        for ctx in seeded_corpus[:10]:
            sel = SubcontextSelector.full(ctx)
            for concept in enumerate_concepts(ctx, tag.mode):
                assert comparison_map(ctx, sel, tag, concept) == concept

    def test_forward_then_backward_is_identity_in_rst(self, seeded_corpus):
        for ctx in seeded_corpus[:20]:
            for sel in some_selectors(ctx):
                sub = restrict(ctx, sel)
                for concept in enumerate_concepts(sub, Mode.RST):
                    back = comparison_map(ctx, sel, ComparisonMapTag.F1, concept)
                    assert comparison_map(ctx, sel, ComparisonMapTag.S1, back) == concept

    def test_backward_maps_agree_on_kept_objects(self, seeded_corpus):
        for ctx in seeded_corpus[:20]:
            for sel in some_selectors(ctx):
                sub = restrict(ctx, sel)
                for concept in enumerate_concepts(sub, Mode.RST):
                    first = comparison_map(ctx, sel, ComparisonMapTag.F1, concept)
                    second = comparison_map(ctx, sel, ComparisonMapTag.F2, concept)
                    assert restrict_subset(first, sel.objects) == restrict_subset(second, sel.objects)

    def test_tag_mode_mismatch(self, counterexample):
        concept = LSubset(("x", "y"), (2, 2))
        with pytest.raises(TagModeMismatchError):
            comparison_map(counterexample, SubcontextSelector.full(counterexample), "R1", concept, Mode.RST)

    def test_input_must_be_a_concept(self, counterexample):
        with pytest.raises(NotAConceptError):
            comparison_map(
                counterexample, SubcontextSelector.full(counterexample), "R1", LSubset(("x", "y"), (1, 1))
            )

    def test_backward_map_on_counterexample(self, counterexample):
        sel = SubcontextSelector((0,), (0,))
        image = comparison_map(counterexample, sel, ComparisonMapTag.E1, LSubset(("x",), (0,)))
        assert image == LSubset(("x", "y"), (0, 1))


class TestVerifyIso:
    """Isomorphism evidence against the reduct verdict"""

    @pytest.mark.parametrize("mode", list(Mode))
    def test_full_selector(self, counterexample, mode):
        evidence = verify_iso_via_maps(counterexample, SubcontextSelector.full(counterexample), mode)
        assert evidence.verdict
        assert evidence.full_size == evidence.sub_size

    def test_negated_counterexample(self, counterexample):
        evidence = verify_iso_via_maps(negate_context(counterexample), SubcontextSelector((0,), (0,)), Mode.RST)
        assert evidence.verdict
        assert evidence.full_size == evidence.sub_size == 3

    def test_counterexample_fails_in_fca(self, counterexample):
        evidence = verify_iso_via_maps(counterexample, SubcontextSelector((0,), (0,)), Mode.FCA)
        assert not evidence.verdict
        assert evidence.consistent
        assert "not surjective" in evidence.failures["E1"]
        assert evidence.full_size == 3
        assert evidence.sub_size == 2

    @pytest.mark.slow
    @pytest.mark.parametrize("mode", list(Mode))
    def test_agrees_with_reduct_verdict_on_corpus(self, seeded_corpus, mode):
        for ctx in seeded_corpus:
            for sel in some_selectors(ctx):
                evidence = verify_iso_via_maps(ctx, sel, mode)
                verdict = is_reduct(ctx, sel, mode).verdict
                assert evidence.consistent
                assert evidence.verdict == verdict
                assert evidence.composites_identity or mode is Mode.FCA
                first_forward, first_backward = ComparisonMapTag.for_mode(mode)[0], ComparisonMapTag.for_mode(mode)[2]
                assert evidence.composites[f"{first_forward.value}{first_backward.value}"]
                assert evidence.roundtrips[f"{first_backward.value}{first_forward.value}"] == verdict

    def test_document(self, counterexample):
        doc = verify_iso_via_maps(counterexample, SubcontextSelector((0,), (0,)), Mode.FCA).to_document()
        assert doc["verdict"] is False
        assert set(doc["isomorphisms"]) == {"R1", "R2", "E1", "E2"}
        assert set(doc["composites"]) == {"R1E1", "R1E2", "R2E1", "R2E2"}
