"""Reduct decisions

A subcontext is a reduct exactly when the removed objects and the removed
attributes are both reducible, so each decision is two side checks.
"""

from typing import Optional

from reductlab.context import LContext, SubcontextSelector
from reductlab.derivation import Method, Mode
from reductlab.derivation.modes import DEFAULT_BUDGET
from reductlab.infrastructure.logging import get_logger
from reductlab.infrastructure.monitoring import profiler

from .reducibility import SideChecker
from .report import ReductReport

logger = get_logger(__name__)


@profiler.profile("is_reduct")
def is_reduct(
    ctx: LContext,
    sel: SubcontextSelector,
    mode: Mode,
    method: Method = Method.AUTO,
    budget: int = DEFAULT_BUDGET,
    checker: Optional[SideChecker] = None,
) -> ReductReport:
    """Decide whether ``sel`` picks a reduct of ``ctx`` in ``mode``.

    Args:
        ctx: The L-context.
        sel: Kept objects X′ and attributes Y′.
        mode: ``fca`` or ``rst``.
        method: ``exhaustive``, ``generators`` or ``auto``.
        budget: Candidate cap per side check.
        checker: Reuse cached side checks for the same context and mode.

    Returns:
        Report with the verdict and both side checks.
    """
    sel.validate(ctx)
    if checker is None:
        checker = SideChecker(ctx, Mode(mode), method, budget)
    object_side = checker.objects(sel.objects)
    attribute_side = checker.attributes(sel.attributes)
    report = ReductReport(
        mode=checker.mode,
        context=ctx,
        selector=sel,
        object_side=object_side,
        attribute_side=attribute_side,
        method=checker.method,
    )
    logger.debug(
        {
            "message": "reduct decided",
            "mode": checker.mode.value,
            "selector": [list(sel.objects), list(sel.attributes)],
            "verdict": report.verdict,
        }
    )
    return report


def is_fca_reduct(
    ctx: LContext,
    sel: SubcontextSelector,
    method: Method = Method.AUTO,
    budget: int = DEFAULT_BUDGET,
) -> ReductReport:
    """Reduct decision in formal concept analysis"""
    return is_reduct(ctx, sel, Mode.FCA, method, budget)


def is_rst_reduct(
    ctx: LContext,
    sel: SubcontextSelector,
    method: Method = Method.AUTO,
    budget: int = DEFAULT_BUDGET,
) -> ReductReport:
    """Reduct decision in rough set theory"""
    return is_reduct(ctx, sel, Mode.RST, method, budget)
