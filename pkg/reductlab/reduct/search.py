"""Reduct search

Because a selector is a reduct exactly when its object side and attribute
side are reducible, deciding every kept-object set and every kept-attribute
set once (2^|X| + 2^|Y| side checks) decides all 2^(|X|+|Y|) selectors.
Minimal reducts are pairs of minimal reducible sides.
"""

from dataclasses import dataclass
from itertools import combinations, product
from typing import Any, Dict, List, Set, Tuple

from rich.table import Table

from reductlab.context import LContext, SubcontextSelector
from reductlab.derivation import Method, Mode
from reductlab.derivation.modes import DEFAULT_BUDGET
from reductlab.errors import BudgetExceededError
from reductlab.infrastructure.logging import get_logger
from reductlab.infrastructure.monitoring import profiler

from .reducibility import ATTRIBUTES, OBJECTS, SideChecker

logger = get_logger(__name__)

Kept = Tuple[int, ...]


@dataclass(frozen=True)
class MonotonicityViolation:
    """A reducible kept set whose one-element extension is not reducible"""

    side: str
    reducible: Kept
    extension: Kept

    def to_document(self, ctx: LContext) -> Dict[str, Any]:
        labels = ctx.objects if self.side == OBJECTS else ctx.attributes
        return {
            "side": self.side,
            "reducible": [labels[i] for i in self.reducible],
            "extension": [labels[i] for i in self.extension],
        }


@dataclass(frozen=True)
class ReductSearchResult:
    """Reducts found by ``search_reducts``"""

    mode: Mode
    context: LContext
    reducts: Tuple[SubcontextSelector, ...]
    minimal_only: bool
    reducible_objects: Tuple[Kept, ...]
    reducible_attributes: Tuple[Kept, ...]
    monotonicity_violations: Tuple[MonotonicityViolation, ...]
    method: Method
    examined: int

    def __len__(self) -> int:
        return len(self.reducts)

    def to_document(self) -> Dict[str, Any]:
        return {
            "mode": self.mode.value,
            "lattice": self.context.lattice.label,
            "minimal_only": self.minimal_only,
            "method": self.method.value,
            "reducts": [sel.to_document(self.context) for sel in self.reducts],
            "monotonicity_violations": [
                v.to_document(self.context) for v in self.monotonicity_violations
            ],
            "examined": self.examined,
        }

    def render(self) -> Table:
        kind = "minimal reducts" if self.minimal_only else "reducts"
        table = Table(title=f"{self.mode.value.upper()} {kind} ({len(self.reducts)})")
        table.add_column("#", justify="right")
        table.add_column("objects X′")
        table.add_column("attributes Y′")
        for n, sel in enumerate(self.reducts, start=1):
            objects, attributes = sel.labels(self.context)
            table.add_row(str(n), "{" + ", ".join(objects) + "}", "{" + ", ".join(attributes) + "}")
        if self.monotonicity_violations:
            table.caption = f"{len(self.monotonicity_violations)} monotonicity violation(s)"
        return table


def _subsets_largest_first(n: int) -> List[Kept]:
    return [combo for k in range(n, -1, -1) for combo in combinations(range(n), k)]


def _minimal(reducible: Set[Kept]) -> List[Kept]:
    """Reducible sets with no reducible proper subset"""
    return [s for s in reducible if not any(r != s and set(r) < set(s) for r in reducible)]


def _violations(side: str, n: int, reducible: Set[Kept]) -> List[MonotonicityViolation]:
    found = []
    for kept in sorted(reducible, key=lambda s: (len(s), s)):
        for extra in range(n):
            if extra in kept:
                continue
            extension = tuple(sorted(kept + (extra,)))
            if extension not in reducible:
                found.append(MonotonicityViolation(side, kept, extension))
    return found


@profiler.profile("search_reducts")
def search_reducts(
    ctx: LContext,
    mode: Mode,
    minimal_only: bool = True,
    method: Method = Method.AUTO,
    budget: int = DEFAULT_BUDGET,
) -> ReductSearchResult:
    """Find the (minimal) reducts of ``ctx``.

    Args:
        ctx: The L-context.
        mode: ``fca`` or ``rst``.
        minimal_only: Return only reducts minimal under componentwise inclusion.
        method: Side check method.
        budget: Cap on the number of side checks and on each check's work.

    Returns:
        Reducts ordered by total size, then by index tuples. Any empirical
        failure of monotonicity in either side is reported, never pruned on.

    Raises:
        BudgetExceededError: Too many kept sets or selectors to enumerate.
    """
    n_objects, n_attributes = ctx.shape
    side_checks = 2**n_objects + 2**n_attributes
    if side_checks > budget:
        raise BudgetExceededError("reduct search side checks", side_checks, budget)

    checker = SideChecker(ctx, Mode(mode), method, budget)
    object_sets = _subsets_largest_first(n_objects)
    attribute_sets = _subsets_largest_first(n_attributes)
    reducible_objects = {s for s in object_sets if checker.objects(s).reducible}
    reducible_attributes = {s for s in attribute_sets if checker.attributes(s).reducible}
    examined = sum(checker.objects(s).examined for s in object_sets) + sum(
        checker.attributes(s).examined for s in attribute_sets
    )

    if minimal_only:
        object_choice, attribute_choice = _minimal(reducible_objects), _minimal(reducible_attributes)
    else:
        object_choice, attribute_choice = list(reducible_objects), list(reducible_attributes)
    if len(object_choice) * len(attribute_choice) > budget:
        raise BudgetExceededError(
            "reduct listing", len(object_choice) * len(attribute_choice), budget
        )
    reducts = sorted(
        (SubcontextSelector(o, a) for o, a in product(object_choice, attribute_choice)),
        key=lambda sel: (len(sel.objects) + len(sel.attributes), sel.objects, sel.attributes),
    )

    violations = _violations(OBJECTS, n_objects, reducible_objects) + _violations(
        ATTRIBUTES, n_attributes, reducible_attributes
    )
    if violations:
        logger.warning(
            {
                "message": "side reducibility is not monotone on this context",
                "mode": checker.mode.value,
                "violations": len(violations),
            }
        )

    return ReductSearchResult(
        mode=checker.mode,
        context=ctx,
        reducts=tuple(reducts),
        minimal_only=minimal_only,
        reducible_objects=tuple(sorted(reducible_objects, key=lambda s: (len(s), s))),
        reducible_attributes=tuple(sorted(reducible_attributes, key=lambda s: (len(s), s))),
        monotonicity_violations=tuple(violations),
        method=checker.method,
        examined=examined,
    )
