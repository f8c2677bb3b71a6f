"""Comparison maps between full and restricted concept lattices

Forward maps go from the full lattice to the restricted one, backward maps
the other way. With X′, Y′ the kept objects and attributes, c the mode's
closure and μ̲ the bottom-extension of μ′ to X:

    R1/S1  μ  ↦ c_{X′,Y′}(μ_{X′})        E1/F1  μ′ ↦ c(μ̲′)
    R2/S2  μ  ↦ (c_{X,Y′} μ)_{X′}         E2/F2  μ′ ↦ c_{X,Y′}(μ̲′)

R/E belong to FCA (c = φ↓φ↑), S/F to RST (c = φ∀φ∃).
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Any, Dict, Optional, Tuple

import numpy as np

from reductlab.context import LContext, LSubset, SubcontextSelector, restrict
from reductlab.derivation import (
    ConceptLattice,
    Derivations,
    Mode,
    Strategy,
    enumerate_concepts,
    is_concept,
)
from reductlab.derivation.modes import DEFAULT_BUDGET
from reductlab.errors import CarrierMismatchError, NotAConceptError, TagModeMismatchError
from reductlab.infrastructure.logging import get_logger
from reductlab.infrastructure.monitoring import profiler

logger = get_logger(__name__)

FORWARD = "forward"
BACKWARD = "backward"


class ComparisonMapTag(str, Enum):
    """The eight comparison maps"""

    R1 = "R1"
    R2 = "R2"
    E1 = "E1"
    E2 = "E2"
    S1 = "S1"
    S2 = "S2"
    F1 = "F1"
    F2 = "F2"

    @property
    def mode(self) -> Mode:
        return Mode.FCA if self.value[0] in "RE" else Mode.RST

    @property
    def direction(self) -> str:
        return FORWARD if self.value[0] in "RS" else BACKWARD

    @property
    def variant(self) -> int:
        return int(self.value[1])

    @classmethod
    def for_mode(cls, mode: Mode) -> Tuple["ComparisonMapTag", ...]:
        return tuple(tag for tag in cls if tag.mode is Mode(mode))


class _MapKernels:
    """Batched evaluation of the comparison maps for one selector"""

    def __init__(self, ctx: LContext, sel: SubcontextSelector, mode: Mode):
        self.ctx = ctx
        self.sel = sel
        self.mode = mode
        self.kept = list(sel.objects)
        self.sub = restrict(ctx, sel)
        self.full_close = Derivations.of(ctx).closure(mode)
        self.sub_close = Derivations.of(self.sub).closure(mode)
        self.wide_close = Derivations(ctx.lattice, ctx.phi[:, list(sel.attributes)]).closure(mode)

    def extend(self, values: np.ndarray) -> np.ndarray:
        wide = np.full(values.shape[:-1] + (len(self.ctx.objects),), self.ctx.lattice.bottom, dtype=np.int64)
        wide[..., self.kept] = values
        return wide

    def apply(self, tag: ComparisonMapTag, values: np.ndarray) -> np.ndarray:
        if tag.direction == FORWARD:
            if tag.variant == 1:
                return self.sub_close(values[..., self.kept])
            return self.wide_close(values)[..., self.kept]
        if tag.variant == 1:
            return self.full_close(self.extend(values))
        return self.wide_close(self.extend(values))


def comparison_map(
    ctx: LContext,
    sel: SubcontextSelector,
    tag: ComparisonMapTag,
    mu: LSubset,
    mode: Optional[Mode] = None,
) -> LSubset:
    """Evaluate one comparison map on a concept.

    Forward tags take a concept of ``ctx``; backward tags take a concept of
    the restricted context.

    Raises:
        TagModeMismatchError: ``mode`` given and different from the tag's.
        NotAConceptError: ``mu`` is not a fixed point of the source closure.
    """
    tag = ComparisonMapTag(tag)
    if mode is not None and Mode(mode) is not tag.mode:
        raise TagModeMismatchError(tag.value, Mode(mode).value)
    sel.validate(ctx)
    kernels = _MapKernels(ctx, sel, tag.mode)
    source = ctx if tag.direction == FORWARD else kernels.sub
    target = kernels.sub if tag.direction == FORWARD else ctx

    if mu.carrier != source.objects:
        raise CarrierMismatchError(source.objects, mu.carrier)
    if not is_concept(source, tag.mode, mu):
        where = "the full context" if tag.direction == FORWARD else "the subcontext"
        raise NotAConceptError(mu.names(ctx.lattice), f"{where} ({tag.mode.value})")
    return LSubset(target.objects, tuple(kernels.apply(tag, mu.as_array())))


@dataclass
class IsoEvidence:
    """Per-tag isomorphism results for one selector"""

    mode: Mode
    full_size: int
    sub_size: int
    isomorphisms: Dict[str, bool] = field(default_factory=dict)
    failures: Dict[str, str] = field(default_factory=dict)
    composites: Dict[str, bool] = field(default_factory=dict)
    roundtrips: Dict[str, bool] = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        return all(self.isomorphisms.values())

    @property
    def consistent(self) -> bool:
        """All four tags agree"""
        return len(set(self.isomorphisms.values())) <= 1

    @property
    def composites_identity(self) -> bool:
        return all(self.composites.values())

    def to_document(self) -> Dict[str, Any]:
        return {
            "mode": self.mode.value,
            "verdict": self.verdict,
            "consistent": self.consistent,
            "full_size": self.full_size,
            "sub_size": self.sub_size,
            "isomorphisms": dict(self.isomorphisms),
            "failures": dict(self.failures),
            "composites": dict(self.composites),
            "roundtrips": dict(self.roundtrips),
        }


def _as_array(lattice: ConceptLattice) -> np.ndarray:
    return np.asarray([c.values for c in lattice.concepts], dtype=np.int64).reshape(
        len(lattice), len(lattice.context.objects)
    )


def _check_isometric_bijection(
    domain: ConceptLattice, codomain: ConceptLattice, images: np.ndarray
) -> Optional[str]:
    codomain_keys = codomain.value_sets()
    image_keys = [tuple(int(v) for v in row) for row in images]
    outside = [key for key in image_keys if key not in codomain_keys]
    if outside:
        return f"image {outside[0]} is not a concept of the codomain"
    if len(set(image_keys)) != len(image_keys):
        return "not injective"
    if len(image_keys) != len(codomain_keys):
        return f"not surjective ({len(image_keys)} of {len(codomain_keys)} concepts hit)"
    positions = [codomain.index_of(LSubset(codomain.context.objects, key)) for key in image_keys]
    induced = codomain.order[np.ix_(positions, positions)] if positions else codomain.order
    if not np.array_equal(induced, domain.order):
        return "not L-isometric"
    return None


@profiler.profile("verify_iso_via_maps")
def verify_iso_via_maps(
    ctx: LContext,
    sel: SubcontextSelector,
    mode: Mode,
    budget: int = DEFAULT_BUDGET,
) -> IsoEvidence:
    """Check, by enumerating both concept lattices, which comparison maps are
    isomorphisms of complete L-lattices, and which forward∘backward and
    backward∘forward composites are identities."""
    mode = Mode(mode)
    sel.validate(ctx)
    kernels = _MapKernels(ctx, sel, mode)
    full = enumerate_concepts(ctx, mode, Strategy.GENERATORS, budget)
    sub = enumerate_concepts(kernels.sub, mode, Strategy.GENERATORS, budget)
    full_values, sub_values = _as_array(full), _as_array(sub)

    evidence = IsoEvidence(mode=mode, full_size=len(full), sub_size=len(sub))
    for tag in ComparisonMapTag.for_mode(mode):
        if tag.direction == FORWARD:
            failure = _check_isometric_bijection(full, sub, kernels.apply(tag, full_values))
        else:
            failure = _check_isometric_bijection(sub, full, kernels.apply(tag, sub_values))
        evidence.isomorphisms[tag.value] = failure is None
        if failure is not None:
            evidence.failures[tag.value] = failure

    forwards = [t for t in ComparisonMapTag.for_mode(mode) if t.direction == FORWARD]
    backwards = [t for t in ComparisonMapTag.for_mode(mode) if t.direction == BACKWARD]
    for fwd, bwd in product(forwards, backwards):
        there_and_back = kernels.apply(fwd, kernels.apply(bwd, sub_values))
        evidence.composites[f"{fwd.value}{bwd.value}"] = bool(np.array_equal(there_and_back, sub_values))
        back_and_there = kernels.apply(bwd, kernels.apply(fwd, full_values))
        evidence.roundtrips[f"{bwd.value}{fwd.value}"] = bool(np.array_equal(back_and_there, full_values))

    if not evidence.composites_identity:
        failing = sorted(k for k, ok in evidence.composites.items() if not ok)
        logger.warning(
            {"message": "composite comparison maps are not the identity", "mode": mode.value, "composites": failing}
        )
    if not evidence.consistent:
        logger.warning({"message": "comparison map tags disagree", "isomorphisms": evidence.isomorphisms})
    return evidence
