"""Concept L-lattices

The FCA concept lattice is Fix(φ↓φ↑) and the property-oriented one is
Fix(φ∀φ∃), both inside L^X. Two strategies enumerate them: ``naive`` filters
all of L^X, ``generators`` meet-closes the spanning family of the closure
system (the image of φ↓ or φ∀).
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterator, Set, Tuple

import numpy as np

from reductlab.context import LContext, LSubset
from reductlab.errors import BudgetExceededError, CarrierMismatchError
from reductlab.infrastructure.logging import get_logger
from reductlab.infrastructure.monitoring import metrics, profiler
from reductlab.lattice import Lattice

from .modes import DEFAULT_BUDGET, Mode, Strategy
from .operators import Derivations, iter_lsubsets

logger = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class ConceptLattice:
    """Fixed points of a mode's closure with their induced L-order"""

    mode: Mode
    context: LContext
    concepts: Tuple[LSubset, ...]
    order: np.ndarray
    strategy: Strategy
    examined: int

    def __len__(self) -> int:
        return len(self.concepts)

    def __iter__(self) -> Iterator[LSubset]:
        return iter(self.concepts)

    def __contains__(self, mu: object) -> bool:
        return mu in self._positions

    @property
    def _positions(self) -> Dict[LSubset, int]:
        cached = self.__dict__.get("_position_cache")
        if cached is None:
            cached = {c: i for i, c in enumerate(self.concepts)}
            object.__setattr__(self, "_position_cache", cached)
        return cached

    def index_of(self, mu: LSubset) -> int:
        return self._positions[mu]

    def value_sets(self) -> Set[Tuple[int, ...]]:
        return {c.values for c in self.concepts}

    def to_document(self) -> Dict[str, Any]:
        names = self.context.lattice.names
        return {
            "mode": self.mode.value,
            "strategy": self.strategy.value,
            "lattice": self.context.lattice.label,
            "objects": list(self.context.objects),
            "size": len(self.concepts),
            "concepts": [list(c.names(self.context.lattice)) for c in self.concepts],
            "order": [[names[v] for v in row] for row in self.order],
            "examined": self.examined,
        }


def concept_order(derivations: Derivations, concepts: np.ndarray) -> np.ndarray:
    """Matrix of L^X(c_i, c_j)"""
    if len(concepts) == 0:
        return np.zeros((0, 0), dtype=np.int64)
    return derivations.order(concepts[:, None, :], concepts[None, :, :])


def naive_fixed_points(
    derivations: Derivations, mode: Mode, budget: int
) -> Tuple[np.ndarray, int]:
    """Filter all of L^X by closure(μ) = μ; rows come out in lexicographic order"""
    size, length = derivations.lattice.size, derivations.n_objects
    total = size**length
    if total > budget:
        raise BudgetExceededError(f"naive enumeration of L^X (|L|^|X| = {size}^{length})", total, budget)
    close = derivations.closure(mode)
    found = [chunk[(close(chunk) == chunk).all(axis=1)] for chunk in iter_lsubsets(size, length)]
    return np.concatenate(found, axis=0), total


def meet_closure(
    lattice: Lattice, generators: np.ndarray, length: int, budget: int, what: str
) -> Tuple[np.ndarray, int]:
    """Meet-closure of ``generators`` together with the top L-subset.

    Every finite meet of generators is reached by meeting closed elements
    with single generators, so a worklist over the generators suffices.
    Each elementwise meet of two L-subsets counts against ``budget``.
    """
    if length == 0:
        return np.zeros((1, 0), dtype=np.int64), 0
    rows = {tuple(int(v) for v in row) for row in generators.reshape(-1, length)}
    generators = np.asarray(sorted(rows), dtype=np.int64).reshape(-1, length)
    top = tuple([lattice.top] * length)

    closed: Set[Tuple[int, ...]] = {top} | rows
    queue = list(closed)
    examined = 0
    while queue:
        current = np.asarray(queue.pop(), dtype=np.int64)
        examined += len(generators)
        if examined > budget:
            raise BudgetExceededError(what, examined, budget)
        meets = lattice.meet_table[current[None, :], generators]
        for row in meets:
            key = tuple(int(v) for v in row)
            if key not in closed:
                closed.add(key)
                queue.append(key)

    ordered = np.asarray(sorted(closed), dtype=np.int64).reshape(-1, length)
    return ordered, examined


@profiler.profile("enumerate_concepts")
def enumerate_concepts(
    ctx: LContext,
    mode: Mode,
    strategy: Strategy = Strategy.GENERATORS,
    budget: int = DEFAULT_BUDGET,
) -> ConceptLattice:
    """Enumerate the concept L-lattice of ``ctx``.

    Args:
        ctx: The L-context.
        mode: ``fca`` for Fix(φ↓φ↑), ``rst`` for Fix(φ∀φ∃).
        strategy: ``naive`` or ``generators``; both return the same set.
        budget: Candidate cap; naive needs |L|^|X|, generators counts meets.

    Returns:
        Concepts sorted lexicographically by value vector, with their L-order.

    Raises:
        BudgetExceededError: If the strategy would exceed ``budget``.
    """
    mode, strategy = Mode(mode), Strategy(strategy)
    derivations = Derivations.of(ctx)

    if strategy is Strategy.NAIVE:
        fixed, examined = naive_fixed_points(derivations, mode, budget)
    else:
        fixed, examined = meet_closure(
            ctx.lattice,
            derivations.attribute_generators(mode),
            len(ctx.objects),
            budget,
            f"{mode.value} concept generation",
        )

    metrics.increment_counter("concepts_enumerated", len(fixed), {"mode": mode.value})
    metrics.increment_counter("subsets_examined", examined, {"strategy": strategy.value})
    metrics.set_gauge("concept_lattice_size", len(fixed), {"mode": mode.value})
    logger.debug(
        {
            "message": "concepts enumerated",
            "mode": mode.value,
            "strategy": strategy.value,
            "count": len(fixed),
            "examined": examined,
        }
    )
    return ConceptLattice(
        mode=mode,
        context=ctx,
        concepts=tuple(LSubset(ctx.objects, tuple(row)) for row in fixed),
        order=concept_order(derivations, fixed),
        strategy=strategy,
        examined=examined,
    )


def is_concept(ctx: LContext, mode: Mode, mu: LSubset) -> bool:
    """Whether ``mu`` is a fixed point of the mode's closure"""
    if mu.carrier != ctx.objects:
        raise CarrierMismatchError(ctx.objects, mu.carrier)
    values = mu.as_array()
    return bool((Derivations.of(ctx).closure(mode)(values) == values).all())
