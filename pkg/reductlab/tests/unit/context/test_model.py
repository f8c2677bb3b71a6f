"""Tests for L-contexts, L-subsets and selectors"""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from reductlab.context import (
    LContext,
    LSubset,
    SubcontextSelector,
    dual_context,
    extend_by_bottom,
    negate_context,
    random_context,
    restrict,
    restrict_subset,
)
from reductlab.errors import (
    CarrierMismatchError,
    DuplicateLabelError,
    ElementIndexError,
    RaggedMatrixError,
    SelectorRangeError,
    UnknownLabelError,
)
from reductlab.lattice import parse_builtin


class TestLContext:
    """Construction checks"""

    def test_matrix_is_read_only(self, counterexample):
        with pytest.raises(ValueError):
            counterexample.phi[0, 0] = 2

    def test_from_names(self, godel3):
        ctx = LContext.from_names(godel3, ["x", "y"], ["star"], [["0"], ["1/2"]])
        assert ctx.phi.tolist() == [[0], [1]]
        assert ctx.entry("y", "star") == 1
        assert ctx.rows() == (("0",), ("1/2",))

    def test_duplicate_labels(self, godel3):
        with pytest.raises(DuplicateLabelError):
            LContext(godel3, ("x", "x"), ("star",), np.array([[0], [1]]))

    def test_ragged_matrix(self, godel3):
        with pytest.raises(RaggedMatrixError):
            LContext(godel3, ("x", "y"), ("a", "b"), np.array([[0], [1]]))

    def test_out_of_range_entry(self, godel3):
        with pytest.raises(ElementIndexError):
            LContext(godel3, ("x",), ("a",), np.array([[3]]))

    def test_empty_attribute_set(self, godel3):
        ctx = LContext(godel3, ("x", "y"), (), [])
        assert ctx.shape == (2, 0)

    def test_equality_is_by_value(self, counterexample, godel3):
        same = LContext(godel3, ("x", "y"), ("star",), [[0], [1]])
        assert same == counterexample
        assert hash(same) == hash(counterexample)


class TestLSubset:
    """Value vectors over a labelled carrier"""

    def test_lookup_and_names(self, godel3):
        mu = LSubset.from_names(godel3, ["x", "y"], ["0", "1/2"])
        assert mu["y"] == 1
        assert mu.names(godel3) == ("0", "1/2")
        assert mu.to_document(godel3) == {"x": "0", "y": "1/2"}

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            LSubset(("x",), (0, 1))

    def test_restrict_subset(self):
        mu = LSubset(("x", "y"), (0, 1))
        assert restrict_subset(mu, [0]) == LSubset(("x",), (0,))

    def test_restrict_subset_out_of_range(self):
        with pytest.raises(SelectorRangeError):
            restrict_subset(LSubset(("x",), (0,)), [1])

    def test_extend_by_bottom(self, godel3):
        extended = extend_by_bottom(LSubset(("y",), (2,)), ("x", "y", "z"), godel3)
        assert extended == LSubset(("x", "y", "z"), (0, 2, 0))

    def test_extend_by_bottom_needs_a_sub_carrier(self, godel3):
        with pytest.raises(CarrierMismatchError):
            extend_by_bottom(LSubset(("w",), (2,)), ("x",), godel3)


class TestSubcontextSelector:
    """Selectors and restriction"""

    def test_indices_are_sorted_and_deduplicated(self):
        sel = SubcontextSelector((2, 0, 2), (1,))
        assert sel.objects == (0, 2)

    def test_from_labels(self, counterexample):
        sel = SubcontextSelector.from_labels(counterexample, ["x"], None)
        assert sel == SubcontextSelector((0,), (0,))

    def test_unknown_labels(self, counterexample):
        with pytest.raises(UnknownLabelError) as exc:
            SubcontextSelector.from_labels(counterexample, ["x", "w"], [])
        assert exc.value.labels == ("w",)
        assert exc.value.exit_code == 5

    def test_out_of_range(self, counterexample):
        with pytest.raises(SelectorRangeError):
            SubcontextSelector((0, 5), (0,)).validate(counterexample)

    def test_restrict_counterexample(self, counterexample):
        sub = restrict(counterexample, SubcontextSelector((0,), (0,)))
        assert sub.objects == ("x",)
        assert sub.phi.tolist() == [[0]]

    def test_composition(self):
        outer = SubcontextSelector((1, 2, 4), (0, 3))
        inner = SubcontextSelector((0, 2), (1,))
        assert outer.then(inner) == SubcontextSelector((1, 4), (3,))

    def test_inclusion_and_full(self, counterexample):
        full = SubcontextSelector.full(counterexample)
        assert full.is_full(counterexample)
        assert full.includes(SubcontextSelector((1,), ()))
        assert not SubcontextSelector((1,), ()).includes(full)


class TestConstructions:
    """Negation, dual and random contexts"""

    def test_negate_counterexample(self, counterexample):
        assert negate_context(counterexample).phi.tolist() == [[2], [0]]

    def test_dual_transposes(self, counterexample):
        dual = dual_context(counterexample)
        assert dual.objects == ("star",)
        assert dual.attributes == ("x", "y")
        assert dual.phi.tolist() == [[0, 1]]

    def test_random_context_is_reproducible(self, luk3):
        first = random_context(luk3, 3, 2, np.random.default_rng(5))
        second = random_context(luk3, 3, 2, np.random.default_rng(5))
        assert first == second
        assert first.objects == ("x0", "x1", "x2")


# ===== Properties =====

BUILTINS = ["boolean", "godel(3)", "lukasiewicz(3)", "godel(4)"]


@st.composite
def contexts(draw):
    lattice = parse_builtin(draw(st.sampled_from(BUILTINS)))
    n_objects, n_attributes = draw(st.integers(1, 4)), draw(st.integers(1, 4))
    entries = draw(
        st.lists(
            st.integers(0, lattice.size - 1),
            min_size=n_objects * n_attributes,
            max_size=n_objects * n_attributes,
        )
    )
    matrix = np.array(entries, dtype=np.int64).reshape(n_objects, n_attributes)
    return LContext(
        lattice,
        tuple(f"x{i}" for i in range(n_objects)),
        tuple(f"y{j}" for j in range(n_attributes)),
        matrix,
    )


def selectors(draw, n_objects: int, n_attributes: int) -> SubcontextSelector:
    objects = draw(st.sets(st.integers(0, n_objects - 1))) if n_objects else set()
    attributes = draw(st.sets(st.integers(0, n_attributes - 1))) if n_attributes else set()
    return SubcontextSelector(tuple(objects), tuple(attributes))


class TestRestrictionProperties:
    """Restriction composes and commutes with negation"""

    @given(contexts(), st.data())
    def test_restrict_is_functorial(self, ctx, data):
        outer = selectors(data.draw, *ctx.shape)
        inner = selectors(data.draw, len(outer.objects), len(outer.attributes))
        assert restrict(restrict(ctx, outer), inner) == restrict(ctx, outer.then(inner))

    @given(contexts(), st.data())
    def test_negation_commutes_with_restriction(self, ctx, data):
        sel = selectors(data.draw, *ctx.shape)
        assert negate_context(restrict(ctx, sel)) == restrict(negate_context(ctx), sel)
