"""Infomorphisms between L-contexts

An infomorphism (f, g): (X, Y, φ) → (X₂, Y₂, ψ) is a pair of maps
f: X → X₂ and g: Y₂ → Y with φ(x, g b) = ψ(f x, b). It induces a map of
concept lattices μ ↦ closure_ψ(f→μ) whose right adjoint is f←.
"""

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from reductlab.context import LContext, LSubset
from reductlab.errors import CarrierMismatchError, NotAConceptError, NotAnInfomorphismError
from reductlab.lattice import Lattice

from .concepts import is_concept
from .modes import Mode
from .operators import Derivations


@dataclass(frozen=True)
class Infomorphism:
    """Object map ``f`` (indices into the target's objects) and attribute map
    ``g`` (indices into the source's attributes)."""

    source: LContext
    target: LContext
    f: Tuple[int, ...]
    g: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "f", tuple(int(i) for i in self.f))
        object.__setattr__(self, "g", tuple(int(j) for j in self.g))
        self.check()

    def check(self) -> None:
        """Verify shapes and the infomorphism equation"""
        src, dst = self.source, self.target
        if src.lattice != dst.lattice:
            raise CarrierMismatchError(src.lattice.names, dst.lattice.names)
        if len(self.f) != len(src.objects) or any(
            not 0 <= a < len(dst.objects) for a in self.f
        ):
            raise CarrierMismatchError(src.objects, [str(a) for a in self.f])
        if len(self.g) != len(dst.attributes) or any(
            not 0 <= b < len(src.attributes) for b in self.g
        ):
            raise CarrierMismatchError(dst.attributes, [str(b) for b in self.g])

        left = src.phi[:, list(self.g)]
        right = dst.phi[list(self.f), :] if self.f else np.zeros_like(left)
        bad = np.argwhere(left != right)
        if bad.size:
            x, b = (int(v) for v in bad[0])
            raise NotAnInfomorphismError(src.objects[x], dst.attributes[b])


def direct_image(lattice: Lattice, f: Sequence[int], mu: np.ndarray, size: int) -> np.ndarray:
    """(f→μ)(a) = ⋁{μ(x) : f x = a}"""
    image = np.full(size, lattice.bottom, dtype=np.int64)
    for x, a in enumerate(f):
        image[a] = lattice.join_table[image[a], mu[x]]
    return image


def preimage(f: Sequence[int], lam: np.ndarray) -> np.ndarray:
    """(f←λ)(x) = λ(f x)"""
    return np.asarray(lam, dtype=np.int64)[list(f)] if len(f) else np.zeros(0, dtype=np.int64)


def infomorphism_image(info: Infomorphism, mode: Mode, mu: LSubset) -> LSubset:
    """The induced map on concepts: closure in the target of f→μ"""
    src, dst = info.source, info.target
    if mu.carrier != src.objects:
        raise CarrierMismatchError(src.objects, mu.carrier)
    if not is_concept(src, mode, mu):
        raise NotAConceptError(mu.names(src.lattice), f"the source {Mode(mode).value} lattice")
    pushed = direct_image(src.lattice, info.f, mu.as_array(), len(dst.objects))
    closed = Derivations.of(dst).closure(mode)(pushed)
    return LSubset(dst.objects, tuple(closed))


def infomorphism_preimage(info: Infomorphism, mode: Mode, lam: LSubset) -> LSubset:
    """Right adjoint of the induced map: λ ↦ λ∘f"""
    src, dst = info.source, info.target
    if lam.carrier != dst.objects:
        raise CarrierMismatchError(dst.objects, lam.carrier)
    if not is_concept(dst, mode, lam):
        raise NotAConceptError(lam.names(dst.lattice), f"the target {Mode(mode).value} lattice")
    return LSubset(src.objects, tuple(preimage(info.f, lam.as_array())))


def identity_infomorphism(ctx: LContext) -> Infomorphism:
    return Infomorphism(ctx, ctx, tuple(range(len(ctx.objects))), tuple(range(len(ctx.attributes))))


def object_inclusion(ctx: LContext, sub: LContext) -> Infomorphism:
    """(τ, 1_Y): φ_{X′,Y} → φ for a subcontext keeping every attribute"""
    f = tuple(ctx.objects.index(label) for label in sub.objects)
    return Infomorphism(sub, ctx, f, tuple(range(len(ctx.attributes))))


def attribute_inclusion(ctx: LContext, sub: LContext) -> Infomorphism:
    """(1_X, ν): φ → φ_{X,Y′} for a subcontext keeping every object"""
    g = tuple(ctx.attributes.index(label) for label in sub.attributes)
    return Infomorphism(ctx, sub, tuple(range(len(ctx.objects))), g)
