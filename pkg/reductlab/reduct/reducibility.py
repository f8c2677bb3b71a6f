"""Side reducibility checks

Removing objects X∖X′ is harmless exactly when the attribute-side composite
(φ↑φ↓ for FCA, φ∃φ∀ for RST) on L^Y is unchanged by restricting to X′.
Removing attributes Y∖Y′ is harmless exactly when the object-side closure
(φ↓φ↑ or φ∀φ∃) on L^X is unchanged by restricting to Y′.

Each check has two methods:

* ``exhaustive`` compares both operators on every L-subset.
* ``generators`` checks that each generator contributed by a removed object
  or attribute is already a fixed point of the restricted operator. The
  restricted fixed-point set is always contained in the full one, and both
  are spanned by their generators, so this decides equality.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence, Tuple

import numpy as np

from reductlab.context import LContext, LSubset
from reductlab.derivation import Derivations, Method, Mode, iter_lsubsets
from reductlab.derivation.modes import DEFAULT_BUDGET
from reductlab.errors import BudgetExceededError
from reductlab.infrastructure.logging import get_logger
from reductlab.infrastructure.monitoring import metrics

logger = get_logger(__name__)

OBJECTS = "objects"
ATTRIBUTES = "attributes"


@dataclass(frozen=True)
class SideCheck:
    """Outcome of one side check; ``witness`` is where the operators differ"""

    side: str
    mode: Mode
    reducible: bool
    witness: Optional[LSubset]
    examined: int
    method: Method

    def to_document(self, ctx: LContext) -> Dict[str, Any]:
        return {
            "reducible": self.reducible,
            "witness": None if self.witness is None else self.witness.to_document(ctx.lattice),
            "examined": self.examined,
            "method": self.method.value,
        }


def resolve_method(ctx: LContext, method: Method, budget: int = DEFAULT_BUDGET) -> Method:
    """``auto`` becomes generators when |L|^max(|X|,|Y|) exceeds the budget"""
    method = Method(method)
    if method is not Method.AUTO:
        return method
    estimate = ctx.lattice.size ** max(len(ctx.objects), len(ctx.attributes))
    chosen = Method.GENERATORS if estimate > budget else Method.EXHAUSTIVE
    logger.debug({"message": "method resolved", "estimate": estimate, "method": chosen.value})
    return chosen


@dataclass
class SideChecker:
    """Side checks for one context and mode, cached by kept index set"""

    ctx: LContext
    mode: Mode
    method: Method = Method.AUTO
    budget: int = DEFAULT_BUDGET
    _cache: Dict[Tuple[str, Tuple[int, ...]], SideCheck] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        self.mode = Mode(self.mode)
        self.method = resolve_method(self.ctx, self.method, self.budget)
        self.full = Derivations.of(self.ctx)

    def objects(self, kept: Sequence[int]) -> SideCheck:
        """Are the objects outside ``kept`` reducible?"""
        key = (OBJECTS, tuple(sorted(kept)))
        if key not in self._cache:
            self._cache[key] = self._object_side(key[1])
        return self._cache[key]

    def attributes(self, kept: Sequence[int]) -> SideCheck:
        """Are the attributes outside ``kept`` reducible?"""
        key = (ATTRIBUTES, tuple(sorted(kept)))
        if key not in self._cache:
            self._cache[key] = self._attribute_side(key[1])
        return self._cache[key]

    # ----- sides -----

    def _object_side(self, kept: Tuple[int, ...]) -> SideCheck:
        ctx = self.ctx
        sub = Derivations(ctx.lattice, ctx.phi[list(kept), :])
        removed = [i for i in range(len(ctx.objects)) if i not in kept]
        if self.method is Method.GENERATORS:
            family = self.full.object_generators(self.mode, removed)
            result = self._generators(family, sub.dual_closure(self.mode))
        else:
            result = self._exhaustive(
                len(ctx.attributes), self.full.dual_closure(self.mode), sub.dual_closure(self.mode)
            )
        return self._finish(OBJECTS, result, ctx.attributes)

    def _attribute_side(self, kept: Tuple[int, ...]) -> SideCheck:
        ctx = self.ctx
        sub = Derivations(ctx.lattice, ctx.phi[:, list(kept)])
        removed = [j for j in range(len(ctx.attributes)) if j not in kept]
        if self.method is Method.GENERATORS:
            family = self.full.attribute_generators(self.mode, removed)
            result = self._generators(family, sub.closure(self.mode))
        else:
            result = self._exhaustive(
                len(ctx.objects), self.full.closure(self.mode), sub.closure(self.mode)
            )
        return self._finish(ATTRIBUTES, result, ctx.objects)

    # ----- methods -----

    def _exhaustive(
        self, length: int, full_op: Any, sub_op: Any
    ) -> Tuple[Optional[np.ndarray], int]:
        total = self.ctx.lattice.size**length
        if total > self.budget:
            raise BudgetExceededError(
                f"exhaustive {self.mode.value} side check over L^{length}", total, self.budget
            )
        examined = 0
        for chunk in iter_lsubsets(self.ctx.lattice.size, length):
            differs = np.flatnonzero((full_op(chunk) != sub_op(chunk)).any(axis=1))
            if differs.size:
                return chunk[differs[0]], examined + int(differs[0]) + 1
            examined += len(chunk)
        return None, examined

    def _generators(self, family: np.ndarray, sub_op: Any) -> Tuple[Optional[np.ndarray], int]:
        if len(family) > self.budget:
            raise BudgetExceededError(
                f"generator {self.mode.value} side check", len(family), self.budget
            )
        if len(family) == 0:
            return None, 0
        differs = np.flatnonzero((sub_op(family) != family).any(axis=1))
        if differs.size:
            return family[differs[0]], int(differs[0]) + 1
        return None, len(family)

    def _finish(
        self, side: str, result: Tuple[Optional[np.ndarray], int], carrier: Tuple[str, ...]
    ) -> SideCheck:
        witness, examined = result
        metrics.increment_counter("side_checks", labels={"side": side, "method": self.method.value})
        metrics.increment_counter("subsets_examined", examined, {"method": self.method.value})
        return SideCheck(
            side=side,
            mode=self.mode,
            reducible=witness is None,
            witness=None if witness is None else LSubset(carrier, tuple(witness)),
            examined=examined,
            method=self.method,
        )


# ===== Functional entry points =====


def fca_attr_side_reducible(
    ctx: LContext, kept: Sequence[int], method: Method = Method.AUTO, budget: int = DEFAULT_BUDGET
) -> SideCheck:
    """Is φ↓φ↑ = (φ_{X,Y′})↓(φ_{X,Y′})↑ on L^X?"""
    return SideChecker(ctx, Mode.FCA, method, budget).attributes(kept)


def fca_object_side_reducible(
    ctx: LContext, kept: Sequence[int], method: Method = Method.AUTO, budget: int = DEFAULT_BUDGET
) -> SideCheck:
    """Is φ↑φ↓ = (φ_{X′,Y})↑(φ_{X′,Y})↓ on L^Y?"""
    return SideChecker(ctx, Mode.FCA, method, budget).objects(kept)


def rst_attr_side_reducible(
    ctx: LContext, kept: Sequence[int], method: Method = Method.AUTO, budget: int = DEFAULT_BUDGET
) -> SideCheck:
    """Is φ∀φ∃ = (φ_{X,Y′})∀(φ_{X,Y′})∃ on L^X?"""
    return SideChecker(ctx, Mode.RST, method, budget).attributes(kept)


def rst_object_side_reducible(
    ctx: LContext, kept: Sequence[int], method: Method = Method.AUTO, budget: int = DEFAULT_BUDGET
) -> SideCheck:
    """Is φ∃φ∀ = (φ_{X′,Y})∃(φ_{X′,Y})∀ on L^Y?"""
    return SideChecker(ctx, Mode.RST, method, budget).objects(kept)
