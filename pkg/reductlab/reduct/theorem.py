"""Interdefinability of FCA and RST reducts

On a lattice with the law of double negation, (X′, Y′) is an FCA reduct of
φ exactly when it is an RST reduct of ¬φ. Without the law the equivalence
fails, and a two-object, one-attribute context built from an element a with
¬¬a ≠ a shows it. ``verify_interdefinability`` checks the first claim on a
sweep or a seeded sample of contexts, and looks for a witness of the second.
"""

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any, Dict, Iterator, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field
from rich.table import Table

from reductlab.context import (
    LContext,
    SubcontextSelector,
    context_document,
    negate_context,
    random_context,
)
from reductlab.derivation import Method, Mode, iter_lsubsets
from reductlab.derivation.modes import DEFAULT_BUDGET
from reductlab.errors import BudgetExceededError
from reductlab.infrastructure.logging import get_logger
from reductlab.infrastructure.monitoring import metrics, profiler
from reductlab.lattice import Lattice

from .reducibility import SideChecker
from .reducts import is_reduct

logger = get_logger(__name__)


class SamplerConfig(BaseModel):
    """Bounds and seed for the interdefinability sweep"""

    model_config = ConfigDict(extra="forbid", frozen=True)

    seed: int
    samples: int = Field(200, ge=1)
    max_objects: int = Field(3, ge=1)
    max_attributes: int = Field(3, ge=1)
    exhaustive: bool = False
    method: Method = Method.AUTO
    budget: int = Field(DEFAULT_BUDGET, gt=0)


@dataclass(frozen=True)
class Disagreement:
    """A context and selector where the FCA and RST verdicts differ"""

    sample: int
    context: LContext
    selector: SubcontextSelector
    fca_reduct: bool
    rst_reduct_of_negation: bool

    def to_document(self) -> Dict[str, Any]:
        doc = context_document(self.context)
        return {
            "sample": self.sample,
            "context": {
                "attributes": doc["attributes"],
                "objects": doc["objects"],
            },
            "selector": self.selector.to_document(self.context),
            "fca_reduct": self.fca_reduct,
            "rst_reduct_of_negation": self.rst_reduct_of_negation,
        }


@dataclass
class InterdefinabilityReport:
    """Outcome of ``verify_interdefinability``"""

    lattice: Lattice
    dne: bool
    dne_witness: Optional[int]
    strategy: str
    contexts_checked: int = 0
    selectors_checked: int = 0
    violations: List[Disagreement] = field(default_factory=list)
    witness: Optional[Disagreement] = None
    witness_from_construction: bool = False

    @property
    def consistent(self) -> bool:
        """Behaviour matches the theorem for this lattice"""
        if self.dne:
            return not self.violations
        return self.witness is not None

    def to_document(self) -> Dict[str, Any]:
        return {
            "lattice": self.lattice.label,
            "dne": self.dne,
            "dne_witness": None if self.dne_witness is None else self.lattice.names[self.dne_witness],
            "strategy": self.strategy,
            "contexts_checked": self.contexts_checked,
            "selectors_checked": self.selectors_checked,
            "violations": [v.to_document() for v in self.violations],
            "witness": None if self.witness is None else self.witness.to_document(),
            "witness_from_construction": self.witness_from_construction,
            "consistent": self.consistent,
        }

    def render(self) -> Table:
        table = Table(title=f"FCA(φ) vs RST(¬φ) on {self.lattice.label}")
        table.add_column("field")
        table.add_column("value")
        table.add_row("double negation", "holds" if self.dne else f"fails at {self.lattice.names[self.dne_witness]}")
        table.add_row("strategy", self.strategy)
        table.add_row("contexts checked", str(self.contexts_checked))
        table.add_row("selectors checked", str(self.selectors_checked))
        table.add_row("violations", str(len(self.violations)))
        if self.witness is not None:
            objects, attributes = self.witness.selector.labels(self.witness.context)
            rows = "; ".join(" ".join(row) for row in self.witness.context.rows())
            kept = "X′ = {" + ", ".join(objects) + "}, Y′ = {" + ", ".join(attributes) + "}"
            table.add_row("witness", f"[{rows}] with {kept}")
        table.caption = "consistent" if self.consistent else "INCONSISTENT"
        return table


def _selectors(ctx: LContext) -> Iterator[SubcontextSelector]:
    n_objects, n_attributes = ctx.shape
    object_sets = [c for k in range(n_objects + 1) for c in combinations(range(n_objects), k)]
    attribute_sets = [c for k in range(n_attributes + 1) for c in combinations(range(n_attributes), k)]
    for objects, attributes in product(object_sets, attribute_sets):
        yield SubcontextSelector(objects, attributes)


def compare_context(
    ctx: LContext, sample: int, method: Method, budget: int
) -> Tuple[int, List[Disagreement]]:
    """FCA verdicts on φ against RST verdicts on ¬φ for every selector"""
    negated = negate_context(ctx)
    fca = SideChecker(ctx, Mode.FCA, method, budget)
    rst = SideChecker(negated, Mode.RST, method, budget)
    checked, found = 0, []
    for sel in _selectors(ctx):
        checked += 1
        fca_verdict = is_reduct(ctx, sel, Mode.FCA, checker=fca).verdict
        rst_verdict = is_reduct(negated, sel, Mode.RST, checker=rst).verdict
        if fca_verdict != rst_verdict:
            found.append(Disagreement(sample, ctx, sel, fca_verdict, rst_verdict))
    return checked, found


def counterexample_context(lattice: Lattice, a: int) -> LContext:
    """φ(x,⋆) = 0 and φ(y,⋆) = a"""
    return LContext(lattice, ("x", "y"), ("star",), np.array([[lattice.bottom], [a]]))


def _exhaustive_contexts(lattice: Lattice, config: SamplerConfig) -> Iterator[LContext]:
    total = sum(
        lattice.size ** (nx * ny)
        for nx in range(1, config.max_objects + 1)
        for ny in range(1, config.max_attributes + 1)
    )
    if total > config.budget:
        raise BudgetExceededError("exhaustive context sweep", total, config.budget)
    for nx in range(1, config.max_objects + 1):
        for ny in range(1, config.max_attributes + 1):
            for chunk in iter_lsubsets(lattice.size, nx * ny):
                for flat in chunk:
                    yield LContext(
                        lattice,
                        tuple(f"x{i}" for i in range(nx)),
                        tuple(f"y{j}" for j in range(ny)),
                        flat.reshape(nx, ny),
                    )


def _sampled_contexts(lattice: Lattice, config: SamplerConfig) -> Iterator[LContext]:
    rng = np.random.default_rng(config.seed)
    for _ in range(config.samples):
        nx = int(rng.integers(1, config.max_objects + 1))
        ny = int(rng.integers(1, config.max_attributes + 1))
        yield random_context(lattice, nx, ny, rng)


@profiler.profile("verify_interdefinability")
def verify_interdefinability(lattice: Lattice, config: SamplerConfig) -> InterdefinabilityReport:
    """Check FCA-reduct(φ) ⟺ RST-reduct(¬φ) against the law of double negation.

    With the law, every disagreement found on the sweep or sample is a
    violation. Without it, the two-object construction is tried first and
    the sample is searched only if that construction does not disagree.

    Args:
        lattice: The lattice under test.
        config: Sampler bounds and seed.

    Returns:
        Report whose ``consistent`` flag says whether behaviour matches.
    """
    dne, dne_witness = lattice.satisfies_dne()
    strategy = "exhaustive" if config.exhaustive else "sampled"
    report = InterdefinabilityReport(lattice=lattice, dne=dne, dne_witness=dne_witness, strategy=strategy)

    if not dne:
        assert dne_witness is not None
        ctx = counterexample_context(lattice, dne_witness)
        checked, found = compare_context(ctx, -1, config.method, config.budget)
        report.contexts_checked += 1
        report.selectors_checked += checked
        preferred = [d for d in found if d.selector == SubcontextSelector((0,), (0,))]
        if found:
            report.witness = (preferred or found)[0]
            report.witness_from_construction = True
            logger.debug({"message": "construction is a witness", "lattice": lattice.label})
            return report

    contexts = _exhaustive_contexts(lattice, config) if config.exhaustive else _sampled_contexts(lattice, config)
    for sample, ctx in enumerate(contexts):
        checked, found = compare_context(ctx, sample, config.method, config.budget)
        report.contexts_checked += 1
        report.selectors_checked += checked
        if dne:
            report.violations.extend(found)
        elif found:
            report.witness = found[0]
            break

    metrics.increment_counter("theorem_contexts", report.contexts_checked, {"lattice": lattice.label})
    if dne and report.violations:
        logger.warning(
            {"message": "interdefinability violated", "lattice": lattice.label, "violations": len(report.violations)}
        )
    return report
