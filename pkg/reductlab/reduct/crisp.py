"""Classical reducibility on crisp contexts

On the two-element lattice a context is an ordinary relation R ⊆ X × Y.
An object x is reducible in FCA when its row equals the intersection of the
rows of some U ⊆ X′ (the empty intersection being all of Y); in RST when it
equals the union of some kept rows (the empty union being ∅). Attributes
are dual. Decided here by brute force over U, for cross-checking the graded
side checks.
"""

from itertools import combinations
from typing import FrozenSet, Iterable, List, Sequence

from reductlab.context import LContext
from reductlab.derivation import Mode


def _sets(ctx: LContext, by_rows: bool) -> List[FrozenSet[int]]:
    top = ctx.lattice.top
    matrix = ctx.phi if by_rows else ctx.phi.T
    return [frozenset(int(j) for j, v in enumerate(line) if v == top) for line in matrix]


def _generated(target: FrozenSet[int], pool: Sequence[FrozenSet[int]], universe: FrozenSet[int], mode: Mode) -> bool:
    for k in range(len(pool) + 1):
        for combo in combinations(pool, k):
            if Mode(mode) is Mode.FCA:
                value = universe.intersection(*combo) if combo else universe
            else:
                value = frozenset().union(*combo) if combo else frozenset()
            if value == target:
                return True
    return False


def _reducible(ctx: LContext, kept: Iterable[int], mode: Mode, by_rows: bool) -> bool:
    if ctx.lattice.size != 2:
        raise ValueError("classical reducibility is defined on the two-element lattice")
    lines = _sets(ctx, by_rows)
    kept = sorted(set(kept))
    universe = frozenset(range(len(ctx.attributes) if by_rows else len(ctx.objects)))
    pool = [lines[i] for i in kept]
    return all(
        _generated(lines[i], pool, universe, mode)
        for i in range(len(lines))
        if i not in kept
    )


def classical_object_reducible(ctx: LContext, kept: Iterable[int], mode: Mode = Mode.FCA) -> bool:
    """Every removed object row is generated by kept rows"""
    return _reducible(ctx, kept, mode, by_rows=True)


def classical_attribute_reducible(ctx: LContext, kept: Iterable[int], mode: Mode = Mode.FCA) -> bool:
    """Every removed attribute column is generated by kept columns"""
    return _reducible(ctx, kept, mode, by_rows=False)
