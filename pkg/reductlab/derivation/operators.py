"""Derivation operators of an L-context

``Derivations`` holds the batched kernels: every method accepts an integer
array whose last axis runs over X (or Y) and any number of leading batch
axes. The module-level functions are the LSubset-facing wrappers.

    φ↑μ(y) = ⋀_x μ(x) → φ(x,y)        φ↓λ(x) = ⋀_y λ(y) → φ(x,y)
    φ∃μ(y) = ⋁_x μ(x) * φ(x,y)        φ∀λ(x) = ⋀_y φ(x,y) → λ(y)
"""

from typing import Callable, Iterator, Optional, Sequence

import numpy as np

from reductlab.context import LContext, LSubset
from reductlab.errors import CarrierMismatchError
from reductlab.lattice import Lattice

from .modes import CHUNK_SIZE, Mode

Kernel = Callable[[np.ndarray], np.ndarray]


class Derivations:
    """Batched derivation operators bound to one (L, φ)"""

    def __init__(self, lattice: Lattice, phi: np.ndarray):
        self.lattice = lattice
        self.phi = np.asarray(phi, dtype=np.int64)
        self.n_objects, self.n_attributes = self.phi.shape

    @classmethod
    def of(cls, ctx: LContext) -> "Derivations":
        return cls(ctx.lattice, ctx.phi)

    def up(self, mu: np.ndarray) -> np.ndarray:
        graded = self.lattice.residuum_table[np.asarray(mu)[..., :, None], self.phi]
        return self.lattice.meet_reduce(graded, axis=-2)

    def down(self, lam: np.ndarray) -> np.ndarray:
        graded = self.lattice.residuum_table[np.asarray(lam)[..., None, :], self.phi]
        return self.lattice.meet_reduce(graded, axis=-1)

    def exists(self, mu: np.ndarray) -> np.ndarray:
        graded = self.lattice.tensor[np.asarray(mu)[..., :, None], self.phi]
        return self.lattice.join_reduce(graded, axis=-2)

    def forall(self, lam: np.ndarray) -> np.ndarray:
        graded = self.lattice.residuum_table[self.phi, np.asarray(lam)[..., None, :]]
        return self.lattice.meet_reduce(graded, axis=-1)

    def fca_closure(self, mu: np.ndarray) -> np.ndarray:
        """φ↓φ↑ on L^X"""
        return self.down(self.up(mu))

    def rst_closure(self, mu: np.ndarray) -> np.ndarray:
        """φ∀φ∃ on L^X"""
        return self.forall(self.exists(mu))

    def fca_closure_dual(self, lam: np.ndarray) -> np.ndarray:
        """φ↑φ↓ on L^Y"""
        return self.up(self.down(lam))

    def rst_interior_dual(self, lam: np.ndarray) -> np.ndarray:
        """φ∃φ∀ on L^Y"""
        return self.exists(self.forall(lam))

    def closure(self, mode: Mode) -> Kernel:
        """Object-side closure operator of a mode"""
        return self.fca_closure if Mode(mode) is Mode.FCA else self.rst_closure

    def dual_closure(self, mode: Mode) -> Kernel:
        """Attribute-side composite of a mode"""
        return self.fca_closure_dual if Mode(mode) is Mode.FCA else self.rst_interior_dual

    def order(self, left: np.ndarray, right: np.ndarray) -> np.ndarray:
        """Graded inclusion ⋀ left(i) → right(i), batched"""
        graded = self.lattice.residuum_table[np.asarray(left), np.asarray(right)]
        return self.lattice.meet_reduce(graded, axis=-1)

    # ----- generator families -----

    def attribute_generators(self, mode: Mode, attributes: Optional[Sequence[int]] = None) -> np.ndarray:
        """Spanning family of the closed sets in L^X.

        FCA: a → φ(−,y); RST: φ(−,y) → a; for every a ∈ L and y in
        ``attributes`` (all of Y by default). Rows are L-subsets over X.
        """
        columns = self.phi.T if attributes is None else self.phi.T[list(attributes)]
        grades = np.arange(self.lattice.size)
        if Mode(mode) is Mode.FCA:
            family = self.lattice.residuum_table[grades[:, None, None], columns[None, :, :]]
        else:
            family = self.lattice.residuum_table[columns[None, :, :], grades[:, None, None]]
        return family.reshape(family.shape[0] * family.shape[1], self.n_objects)

    def object_generators(self, mode: Mode, objects: Optional[Sequence[int]] = None) -> np.ndarray:
        """Spanning family of the image of the attribute-side composite in L^Y.

        FCA: a → φ(x,−) (meet-generators); RST: a * φ(x,−) (join-generators).
        """
        rows = self.phi if objects is None else self.phi[list(objects)]
        grades = np.arange(self.lattice.size)
        table = self.lattice.residuum_table if Mode(mode) is Mode.FCA else self.lattice.tensor
        family = table[grades[:, None, None], rows[None, :, :]]
        return family.reshape(family.shape[0] * family.shape[1], self.n_attributes)


def iter_lsubsets(size: int, length: int, chunk: int = CHUNK_SIZE) -> Iterator[np.ndarray]:
    """All of L^length in lexicographic order, as (batch, length) chunks"""
    total = size**length
    powers = size ** np.arange(length - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        codes = np.arange(start, min(start + chunk, total), dtype=np.int64)
        yield (codes[:, None] // powers[None, :]) % size


# ===== LSubset wrappers =====


def _check_carrier(expected: Sequence[str], mu: LSubset) -> np.ndarray:
    if tuple(expected) != mu.carrier:
        raise CarrierMismatchError(expected, mu.carrier)
    return mu.as_array()


def up(ctx: LContext, mu: LSubset) -> LSubset:
    """φ↑μ, an L-subset of attributes"""
    values = Derivations.of(ctx).up(_check_carrier(ctx.objects, mu))
    return LSubset(ctx.attributes, tuple(values))


def down(ctx: LContext, lam: LSubset) -> LSubset:
    """φ↓λ, an L-subset of objects"""
    values = Derivations.of(ctx).down(_check_carrier(ctx.attributes, lam))
    return LSubset(ctx.objects, tuple(values))


def exists_op(ctx: LContext, mu: LSubset) -> LSubset:
    """φ∃μ, an L-subset of attributes"""
    values = Derivations.of(ctx).exists(_check_carrier(ctx.objects, mu))
    return LSubset(ctx.attributes, tuple(values))


def forall_op(ctx: LContext, lam: LSubset) -> LSubset:
    """φ∀λ, an L-subset of objects"""
    values = Derivations.of(ctx).forall(_check_carrier(ctx.attributes, lam))
    return LSubset(ctx.objects, tuple(values))


def fca_closure(ctx: LContext, mu: LSubset) -> LSubset:
    values = Derivations.of(ctx).fca_closure(_check_carrier(ctx.objects, mu))
    return LSubset(ctx.objects, tuple(values))


def rst_closure(ctx: LContext, mu: LSubset) -> LSubset:
    values = Derivations.of(ctx).rst_closure(_check_carrier(ctx.objects, mu))
    return LSubset(ctx.objects, tuple(values))


def fca_closure_dual(ctx: LContext, lam: LSubset) -> LSubset:
    values = Derivations.of(ctx).fca_closure_dual(_check_carrier(ctx.attributes, lam))
    return LSubset(ctx.attributes, tuple(values))


def rst_interior_dual(ctx: LContext, lam: LSubset) -> LSubset:
    values = Derivations.of(ctx).rst_interior_dual(_check_carrier(ctx.attributes, lam))
    return LSubset(ctx.attributes, tuple(values))


def closure(ctx: LContext, mode: Mode, mu: LSubset) -> LSubset:
    """Closure of ``mu`` under the object-side operator of ``mode``"""
    return fca_closure(ctx, mu) if Mode(mode) is Mode.FCA else rst_closure(ctx, mu)


def lsubset_order(lattice: Lattice, mu: LSubset, other: LSubset) -> int:
    """Degree ⋀_i μ(i) → μ′(i) to which ``mu`` is included in ``other``"""
    right = _check_carrier(mu.carrier, other)
    graded = lattice.residuum_table[mu.as_array(), right]
    return int(lattice.meet_reduce(graded, axis=-1))
