"""Tests for infomorphisms and their induced maps"""

import pytest

from reductlab.context import LContext, LSubset, SubcontextSelector, extend_by_bottom, restrict
from reductlab.derivation import (
    Infomorphism,
    Mode,
    attribute_inclusion,
    closure,
    enumerate_concepts,
    identity_infomorphism,
    infomorphism_image,
    infomorphism_preimage,
    is_concept,
    object_inclusion,
)
from reductlab.errors import CarrierMismatchError, NotAConceptError, NotAnInfomorphismError


class TestInfomorphismCheck:
    """The equation φ(x, g b) = ψ(f x, b)"""

    def test_violation_names_a_witness(self, counterexample):
        swapped = LContext(counterexample.lattice, ("x", "y"), ("star",), [[1], [0]])
        with pytest.raises(NotAnInfomorphismError) as exc:
            Infomorphism(counterexample, swapped, (0, 1), (0,))
        assert exc.value.witness == ("x", "star")

    def test_map_out_of_range(self, counterexample):
        with pytest.raises(CarrierMismatchError):
            Infomorphism(counterexample, counterexample, (0, 2), (0,))

    def test_swap_is_an_infomorphism(self, counterexample):
        swapped = LContext(counterexample.lattice, ("x", "y"), ("star",), [[1], [0]])
        Infomorphism(counterexample, swapped, (1, 0), (0,))


class TestInducedMaps:
    """Images and preimages of concepts"""

    @pytest.mark.parametrize("mode", list(Mode))
    def test_identity_is_identity_on_concepts(self, seeded_corpus, mode):
        for ctx in seeded_corpus[:15]:
            info = identity_infomorphism(ctx)
            for concept in enumerate_concepts(ctx, mode):
                assert infomorphism_image(info, mode, concept) == concept
                assert infomorphism_preimage(info, mode, concept) == concept

    def test_object_inclusion_closes_the_bottom_extension(self, seeded_corpus):
        for ctx in seeded_corpus[:20]:
            sel = SubcontextSelector(tuple(range(0, len(ctx.objects), 2)), tuple(range(len(ctx.attributes))))
            sub = restrict(ctx, sel)
            info = object_inclusion(ctx, sub)
            for concept in enumerate_concepts(sub, Mode.RST):
                image = infomorphism_image(info, Mode.RST, concept)
                assert image == closure(ctx, Mode.RST, extend_by_bottom(concept, ctx.objects, ctx.lattice))

    def test_object_inclusion_is_isometric(self, seeded_corpus):
        for ctx in seeded_corpus[:20]:
            sel = SubcontextSelector((0,), tuple(range(len(ctx.attributes))))
            sub = restrict(ctx, sel)
            info = object_inclusion(ctx, sub)
            source = enumerate_concepts(sub, Mode.RST)
            target = enumerate_concepts(ctx, Mode.RST)
            positions = [target.index_of(infomorphism_image(info, Mode.RST, c)) for c in source]
            assert target.order[positions][:, positions].tolist() == source.order.tolist()

    def test_attribute_inclusion_adjoint_is_inclusion(self, seeded_corpus):
        for ctx in seeded_corpus[:20]:
            sel = SubcontextSelector(tuple(range(len(ctx.objects))), (0,))
            sub = restrict(ctx, sel)
            info = attribute_inclusion(ctx, sub)
            for concept in enumerate_concepts(sub, Mode.RST):
                pulled = infomorphism_preimage(info, Mode.RST, concept)
                assert pulled == concept
                assert is_concept(ctx, Mode.RST, pulled)

    def test_image_needs_a_concept(self, counterexample):
        info = identity_infomorphism(counterexample)
        with pytest.raises(NotAConceptError):
            infomorphism_image(info, Mode.FCA, LSubset(("x", "y"), (1, 1)))
