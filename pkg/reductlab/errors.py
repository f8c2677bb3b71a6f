"""Error Module

Exception hierarchy for reductlab. Every error carries an exit code so the
CLI can map failures to its stable exit-status contract.
"""

from enum import Enum
from typing import Any, Optional, Sequence, Tuple

EXIT_FALSE = 1
EXIT_INVALID_LATTICE = 2
EXIT_INPUT = 3
EXIT_BUDGET = 4
EXIT_UNKNOWN_LABEL = 5


class AxiomViolation(str, Enum):
    """Lattice axiom failures, in the order the validator checks them"""

    NOT_A_LATTICE_ORDER = "not-a-lattice-order"
    NON_COMMUTATIVE = "non-commutative-tensor"
    NON_ASSOCIATIVE = "non-associative-tensor"
    UNIT_NOT_TOP = "unit-not-top"
    JOIN_DISTRIBUTIVITY = "join-distributivity"
    ADJUNCTION = "adjunction"
    RESIDUUM_MISMATCH = "residuum-mismatch"


class ReductLabError(Exception):
    """Base class for all reductlab errors"""

    exit_code = EXIT_INPUT


class LatticeAxiomError(ReductLabError):
    """A lattice specification violates a residuated lattice axiom"""

    exit_code = EXIT_INVALID_LATTICE

    def __init__(self, code: AxiomViolation, witness: Tuple[str, ...], detail: str):
        self.code = code
        self.witness = witness
        self.detail = detail
        super().__init__(f"{code.value}: {detail} (witness {', '.join(witness)})")


class SpecFormatError(ReductLabError):
    """A lattice or context document is malformed or unreadable"""

    def __init__(self, message: str, source: Optional[str] = None):
        self.source = source
        prefix = f"{source}: " if source else ""
        super().__init__(f"{prefix}{message}")


class UnknownElementError(SpecFormatError):
    """A context entry names an element the lattice does not have"""

    def __init__(self, name: str, row: Optional[str] = None):
        self.name = name
        self.row = row
        where = f" in row {row!r}" if row is not None else ""
        super().__init__(f"unknown lattice element {name!r}{where}")


class DuplicateLabelError(SpecFormatError):
    """Object or attribute labels are not unique"""

    def __init__(self, kind: str, label: str):
        self.kind = kind
        self.label = label
        super().__init__(f"duplicate {kind} label {label!r}")


class RaggedMatrixError(SpecFormatError):
    """A context row does not have one entry per attribute"""

    def __init__(self, row: str, expected: int, found: int):
        self.row = row
        self.expected = expected
        self.found = found
        super().__init__(f"row {row!r} has {found} entries, expected {expected}")


class ElementIndexError(ReductLabError, IndexError):
    """An element index lies outside the lattice"""

    def __init__(self, index: Any, size: int):
        self.index = index
        self.size = size
        super().__init__(f"element index {index!r} out of range for |L| = {size}")


class BudgetExceededError(ReductLabError):
    """A computation would examine more candidates than the budget allows"""

    exit_code = EXIT_BUDGET

    def __init__(self, what: str, required: int, budget: int):
        self.what = what
        self.required = required
        self.budget = budget
        super().__init__(f"{what} needs {required} candidates, budget is {budget}")


class UnknownLabelError(ReductLabError):
    """A selector names objects or attributes absent from the context"""

    exit_code = EXIT_UNKNOWN_LABEL

    def __init__(self, kind: str, labels: Sequence[str]):
        self.kind = kind
        self.labels = tuple(labels)
        super().__init__(f"unknown {kind} label(s): {', '.join(self.labels)}")


class SelectorRangeError(ReductLabError):
    """A selector index lies outside its parent context"""

    exit_code = EXIT_UNKNOWN_LABEL

    def __init__(self, kind: str, index: int, size: int):
        self.kind = kind
        self.index = index
        self.size = size
        super().__init__(f"{kind} index {index} out of range for size {size}")


class CarrierMismatchError(ReductLabError):
    """An L-subset is applied to an operator over a different carrier"""

    def __init__(self, expected: Sequence[str], found: Sequence[str]):
        self.expected = tuple(expected)
        self.found = tuple(found)
        super().__init__(
            f"carrier mismatch: expected {list(self.expected)}, got {list(self.found)}"
        )


class NotAnInfomorphismError(ReductLabError):
    """A pair of maps violates phi(x, g b) = psi(f x, b)"""

    def __init__(self, obj: str, attr: str):
        self.witness = (obj, attr)
        super().__init__(f"infomorphism equation fails at object {obj!r}, attribute {attr!r}")


class NotAConceptError(ReductLabError):
    """An input L-subset is not a fixed point of the required closure"""

    def __init__(self, values: Sequence[str], where: str):
        self.values = tuple(values)
        self.where = where
        super().__init__(f"({', '.join(self.values)}) is not a concept of {where}")


class TagModeMismatchError(ReductLabError):
    """A comparison map tag is used with the other theory"""

    def __init__(self, tag: str, mode: str):
        self.tag = tag
        self.mode = mode
        super().__init__(f"comparison map {tag} does not belong to mode {mode}")
