"""Tests for classical reducibility on crisp contexts"""

import pytest

from reductlab.context import LContext
from reductlab.derivation import Mode
from reductlab.reduct import classical_attribute_reducible, classical_object_reducible


class TestClassicalReducibility:
    def test_closed_set_base(self, closed_set_base):
        assert classical_attribute_reducible(closed_set_base, [0, 1])
        assert not classical_attribute_reducible(closed_set_base, [0, 2])

    def test_empty_intersection_is_the_universe(self, crisp):
        ctx = crisp([[1, 0], [1, 1]])
        assert classical_object_reducible(ctx, [0], Mode.FCA)

    def test_empty_union_is_empty(self, crisp):
        ctx = crisp([[1, 1], [0, 0]])
        assert classical_object_reducible(ctx, [0], Mode.RST)
        assert not classical_object_reducible(ctx, [0], Mode.FCA)

    def test_union_versus_intersection(self, crisp):
        ctx = crisp([[1, 0, 1], [0, 1, 1], [0, 0, 0]])
        assert classical_attribute_reducible(ctx, [0, 1], Mode.RST)
        assert not classical_attribute_reducible(ctx, [0, 1], Mode.FCA)

    def test_requires_two_element_lattice(self, godel3):
        ctx = LContext(godel3, ("x",), ("y",), [[1]])
        with pytest.raises(ValueError):
            classical_object_reducible(ctx, [])
