"""Reduct reports"""

from dataclasses import dataclass
from typing import Any, Dict

from rich.table import Table

from reductlab.context import LContext, SubcontextSelector
from reductlab.derivation import Method, Mode

from .reducibility import SideCheck


@dataclass(frozen=True)
class ReductReport:
    """Verdict for one selector: a reduct iff both sides are reducible"""

    mode: Mode
    context: LContext
    selector: SubcontextSelector
    object_side: SideCheck
    attribute_side: SideCheck
    method: Method

    @property
    def verdict(self) -> bool:
        return self.object_side.reducible and self.attribute_side.reducible

    @property
    def examined(self) -> int:
        return self.object_side.examined + self.attribute_side.examined

    def __bool__(self) -> bool:
        return self.verdict

    def to_document(self) -> Dict[str, Any]:
        return {
            "mode": self.mode.value,
            "lattice": self.context.lattice.label,
            "selector": self.selector.to_document(self.context),
            "verdict": self.verdict,
            "method": self.method.value,
            "object_side": self.object_side.to_document(self.context),
            "attribute_side": self.attribute_side.to_document(self.context),
            "examined": self.examined,
        }

    def render(self) -> Table:
        """Human-readable table"""
        objects, attributes = self.selector.labels(self.context)
        table = Table(
            title=(
                f"{self.mode.value.upper()} reduct check: "
                f"X′ = {{{', '.join(objects)}}}, Y′ = {{{', '.join(attributes)}}}"
            )
        )
        table.add_column("side")
        table.add_column("reducible")
        table.add_column("witness")
        table.add_column("examined", justify="right")
        for label, check in (("objects", self.object_side), ("attributes", self.attribute_side)):
            witness = "-"
            if check.witness is not None:
                witness = ", ".join(
                    f"{k}={v}" for k, v in check.witness.to_document(self.context.lattice).items()
                ) or "()"
            table.add_row(label, "yes" if check.reducible else "no", witness, str(check.examined))
        table.caption = f"verdict: {'REDUCT' if self.verdict else 'NOT A REDUCT'} (method {self.method.value})"
        return table
