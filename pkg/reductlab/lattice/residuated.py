"""Finite complete residuated lattices

A lattice is held as dense integer indices plus read-only numpy tables for
order, meet, join, tensor and residuum. ``validate_lattice`` is the only way
to build one from a user specification; everything downstream assumes the
axioms hold.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from reductlab.errors import (
    AxiomViolation,
    ElementIndexError,
    LatticeAxiomError,
    SpecFormatError,
    UnknownElementError,
)
from reductlab.infrastructure.logging import get_logger

logger = get_logger(__name__)


class LatticeSpec(BaseModel):
    """Serializable description of a finite residuated lattice.

    Either ``builtin`` is set (``lukasiewicz(n)``, ``godel(n)``, ``boolean``)
    or ``elements``, ``order`` and ``tensor`` describe the lattice explicitly.
    ``order`` lists pairs ``[a, b]`` meaning a ≤ b; the reflexive-transitive
    closure is taken, so Hasse edges suffice. ``tensor`` maps each element to
    its row of products, in ``elements`` order. An optional ``residuum`` table
    of the same shape is cross-checked against the derived one.
    """

    model_config = ConfigDict(extra="forbid", frozen=True)

    builtin: Optional[str] = None
    elements: List[str] = []
    order: List[Tuple[str, str]] = []
    tensor: Dict[str, List[str]] = {}
    residuum: Optional[Dict[str, List[str]]] = None

    @field_validator("elements", "order", mode="before")
    @classmethod
    def _names_as_strings(cls, value: Any) -> Any:
        if isinstance(value, list):
            return [_as_names(item) for item in value]
        return value

    @field_validator("tensor", "residuum", mode="before")
    @classmethod
    def _table_names_as_strings(cls, value: Any) -> Any:
        if isinstance(value, dict):
            return {_as_name(key): _as_names(row) for key, row in value.items()}
        return value

    @model_validator(mode="after")
    def _check_tables(self) -> "LatticeSpec":
        if self.builtin is not None:
            if self.elements or self.order or self.tensor or self.residuum:
                raise ValueError("builtin lattices take no explicit tables")
            return self
        if not self.elements:
            raise ValueError("a lattice needs at least one element")
        seen = set()
        for name in self.elements:
            if name in seen:
                raise ValueError(f"duplicate element name {name!r}")
            seen.add(name)
        for label, table in (("tensor", self.tensor), ("residuum", self.residuum)):
            if table is None:
                continue
            if set(table) != seen:
                missing = sorted(seen - set(table))
                extra = sorted(set(table) - seen)
                raise ValueError(
                    f"{label} table rows must cover the elements exactly "
                    f"(missing {missing}, unknown {extra})"
                )
            for row_name, row in table.items():
                if len(row) != len(self.elements):
                    raise ValueError(
                        f"{label} row {row_name!r} has {len(row)} entries, "
                        f"expected {len(self.elements)}"
                    )
                unknown = [entry for entry in row if entry not in seen]
                if unknown:
                    raise ValueError(f"{label} row {row_name!r} names unknown {unknown}")
        for a, b in self.order:
            if a not in seen or b not in seen:
                raise ValueError(f"order pair ({a!r}, {b!r}) names an unknown element")
        return self

    @classmethod
    def from_document(cls, document: Any, source: Optional[str] = None) -> "LatticeSpec":
        """Build a spec from a parsed YAML/JSON mapping"""
        if isinstance(document, str):
            document = {"builtin": document}
        if not isinstance(document, dict):
            raise SpecFormatError("lattice specification must be a mapping", source)
        try:
            return cls.model_validate(document)
        except ValidationError as e:
            raise SpecFormatError(_first_error(e), source) from e


def _as_name(value: Any) -> Any:
    """Unquoted YAML numbers name elements just like their quoted form"""
    return str(value) if isinstance(value, (int, float)) else value


def _as_names(value: Any) -> Any:
    if isinstance(value, (list, tuple)):
        return [_as_name(item) for item in value]
    return _as_name(value)


def _first_error(error: ValidationError) -> str:
    first = error.errors()[0]
    where = ".".join(str(part) for part in first.get("loc", ()))
    message = str(first.get("msg", "invalid lattice specification"))
    return f"{where}: {message}" if where else message


def _readonly(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Lattice:
    """A validated finite complete residuated lattice.

    Elements are the integers ``0 .. size-1``; ``names`` gives their display
    names. Tables are read-only and indexed by element index.
    """

    names: Tuple[str, ...]
    leq: np.ndarray
    meet_table: np.ndarray
    join_table: np.ndarray
    tensor: np.ndarray
    residuum_table: np.ndarray
    bottom: int
    top: int
    values: Optional[Tuple[Fraction, ...]] = None
    builtin: Optional[str] = None
    negation_table: np.ndarray = field(init=False, repr=False)
    _index: Dict[str, int] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "negation_table", _readonly(self.residuum_table[:, self.bottom].copy())
        )
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(self.names)})

    # ----- identity -----

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        return (
            self.names == other.names
            and np.array_equal(self.leq, other.leq)
            and np.array_equal(self.tensor, other.tensor)
        )

    def __hash__(self) -> int:
        return hash((self.names, self.tensor.tobytes()))

    def __repr__(self) -> str:
        return f"Lattice({self.label}, |L|={self.size})"

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def label(self) -> str:
        """Builtin descriptor, or a short description for custom lattices"""
        return self.builtin or f"custom({self.size})"

    @property
    def is_chain(self) -> bool:
        return bool((self.leq | self.leq.T).all())

    # ----- element access -----

    def index(self, name: str) -> int:
        """Index of an element by display name"""
        try:
            return self._index[name]
        except KeyError:
            raise UnknownElementError(name) from None

    def name(self, a: int) -> str:
        return self.names[self.check_index(a)]

    def check_index(self, a: Any) -> int:
        """Validate an element index and return it as a plain int"""
        if isinstance(a, (bool, np.bool_)) or not isinstance(a, (int, np.integer)):
            raise ElementIndexError(a, self.size)
        if not 0 <= int(a) < self.size:
            raise ElementIndexError(a, self.size)
        return int(a)

    def check_indices(self, values: Any) -> np.ndarray:
        """Validate an array of element indices"""
        array = np.asarray(values)
        if array.size == 0:
            return array.astype(np.int64).reshape(array.shape)
        if not np.issubdtype(array.dtype, np.integer):
            raise ElementIndexError(values, self.size)
        if array.min() < 0 or array.max() >= self.size:
            bad = array[(array < 0) | (array >= self.size)].flat[0]
            raise ElementIndexError(int(bad), self.size)
        return array.astype(np.int64)

    # ----- operations -----

    def le(self, a: int, b: int) -> bool:
        return bool(self.leq[self.check_index(a), self.check_index(b)])

    def meet(self, a: int, b: int) -> int:
        return int(self.meet_table[self.check_index(a), self.check_index(b)])

    def join(self, a: int, b: int) -> int:
        return int(self.join_table[self.check_index(a), self.check_index(b)])

    def mul(self, a: int, b: int) -> int:
        return int(self.tensor[self.check_index(a), self.check_index(b)])

    def residuum(self, a: int, b: int) -> int:
        """a → b"""
        return int(self.residuum_table[self.check_index(a), self.check_index(b)])

    def negation(self, a: int) -> int:
        """¬a = a → 0"""
        return int(self.negation_table[self.check_index(a)])

    def meet_all(self, subset: Iterable[int]) -> int:
        """Greatest lower bound; the empty meet is top"""
        return reduce(
            lambda acc, a: int(self.meet_table[acc, self.check_index(a)]), subset, self.top
        )

    def join_all(self, subset: Iterable[int]) -> int:
        """Least upper bound; the empty join is bottom"""
        return reduce(
            lambda acc, a: int(self.join_table[acc, self.check_index(a)]), subset, self.bottom
        )

    def meet_reduce(self, array: np.ndarray, axis: int = -1) -> np.ndarray:
        """Fold ``meet`` over one axis of an index array; empty folds give top"""
        return _fold(self.meet_table, np.asarray(array), axis, self.top)

    def join_reduce(self, array: np.ndarray, axis: int = -1) -> np.ndarray:
        """Fold ``join`` over one axis of an index array; empty folds give bottom"""
        return _fold(self.join_table, np.asarray(array), axis, self.bottom)

    def satisfies_dne(self) -> Tuple[bool, Optional[int]]:
        """Decide ¬¬a = a for every a; the first failing element is the witness"""
        double = self.negation_table[self.negation_table]
        failing = np.flatnonzero(double != np.arange(self.size))
        if failing.size:
            return False, int(failing[0])
        return True, None

    # ----- serialization -----

    def hasse_edges(self) -> List[Tuple[int, int]]:
        """Covering pairs (a, b): a < b with nothing strictly between"""
        strict = self.leq & ~np.eye(self.size, dtype=bool)
        edges = []
        for a, b in zip(*np.nonzero(strict)):
            between = strict[a, :] & strict[:, b]
            if not between.any():
                edges.append((int(a), int(b)))
        return edges

    def to_spec(self) -> LatticeSpec:
        """Specification that validates back to this lattice"""
        if self.builtin is not None:
            return LatticeSpec(builtin=self.builtin)
        return LatticeSpec(
            elements=list(self.names),
            order=[(self.names[a], self.names[b]) for a, b in self.hasse_edges()],
            tensor={
                self.names[a]: [self.names[c] for c in self.tensor[a]]
                for a in range(self.size)
            },
        )


def _fold(table: np.ndarray, array: np.ndarray, axis: int, empty: int) -> np.ndarray:
    moved = np.moveaxis(array, axis, -1)
    if moved.shape[-1] == 0:
        return np.full(moved.shape[:-1], empty, dtype=np.int64)
    result = moved[..., 0].astype(np.int64)
    for k in range(1, moved.shape[-1]):
        result = table[result, moved[..., k]]
    return result


# ===== Module-level operations =====


def residuum(lattice: Lattice, a: int, b: int) -> int:
    """a → b in ``lattice``"""
    return lattice.residuum(a, b)


def negation(lattice: Lattice, a: int) -> int:
    """¬a in ``lattice``"""
    return lattice.negation(a)


def satisfies_dne(lattice: Lattice) -> Tuple[bool, Optional[int]]:
    """Law of double negation with a witness on failure"""
    return lattice.satisfies_dne()


def meet_all(lattice: Lattice, subset: Iterable[int]) -> int:
    return lattice.meet_all(subset)


def join_all(lattice: Lattice, subset: Iterable[int]) -> int:
    return lattice.join_all(subset)


# ===== Validation =====


def validate_lattice(spec: LatticeSpec) -> Lattice:
    """Build a Lattice from a specification, checking every axiom.

    Checks run in this order and the first failure raises
    ``LatticeAxiomError``: lattice order, commutativity, associativity,
    unit, join-distributivity, adjunction of the derived residuum, and
    agreement with a user-supplied residuum table.

    Args:
        spec: Lattice specification.

    Returns:
        The validated lattice.
    """
    if spec.builtin is not None:
        from .chains import parse_builtin

        return parse_builtin(spec.builtin)

    names = tuple(spec.elements)
    n = len(names)
    index = {name: i for i, name in enumerate(names)}
    elements = np.arange(n)

    leq = _order_closure(n, [(index[a], index[b]) for a, b in spec.order])
    _check_antisymmetric(leq, names)
    meet_table = _bound_table(leq, names, lower=True)
    join_table = _bound_table(leq, names, lower=False)
    bottom = int(_fold(meet_table, elements, -1, 0))
    top = int(_fold(join_table, elements, -1, 0))

    tensor = np.array(
        [[index[c] for c in spec.tensor[name]] for name in names], dtype=np.int64
    ).reshape(n, n)

    _check_monoid(tensor, names, top)
    _check_distributive(tensor, join_table, names, bottom)

    residuum_table = _derive_residuum(leq, tensor, join_table, bottom)
    _check_adjunction(leq, tensor, residuum_table, names)

    if spec.residuum is not None:
        given = np.array(
            [[index[c] for c in spec.residuum[name]] for name in names], dtype=np.int64
        ).reshape(n, n)
        diff = np.argwhere(given != residuum_table)
        if diff.size:
            a, b = (int(v) for v in diff[0])
            raise LatticeAxiomError(
                AxiomViolation.RESIDUUM_MISMATCH,
                (names[a], names[b]),
                f"given {names[a]}→{names[b]} = {names[given[a, b]]}, "
                f"derived {names[residuum_table[a, b]]}",
            )

    lattice = Lattice(
        names=names,
        leq=_readonly(leq),
        meet_table=_readonly(meet_table),
        join_table=_readonly(join_table),
        tensor=_readonly(tensor),
        residuum_table=_readonly(residuum_table),
        bottom=bottom,
        top=top,
    )
    logger.debug({"message": "lattice validated", "size": n, "chain": lattice.is_chain})
    return lattice


def _order_closure(n: int, pairs: Sequence[Tuple[int, int]]) -> np.ndarray:
    leq = np.eye(n, dtype=bool)
    for a, b in pairs:
        leq[a, b] = True
    for k in range(n):
        leq |= leq[:, k : k + 1] & leq[k : k + 1, :]
    return leq


def _check_antisymmetric(leq: np.ndarray, names: Tuple[str, ...]) -> None:
    both = leq & leq.T & ~np.eye(len(names), dtype=bool)
    if both.any():
        a, b = (int(v) for v in np.argwhere(both)[0])
        raise LatticeAxiomError(
            AxiomViolation.NOT_A_LATTICE_ORDER,
            (names[a], names[b]),
            f"{names[a]} ≤ {names[b]} and {names[b]} ≤ {names[a]}",
        )


def _bound_table(leq: np.ndarray, names: Tuple[str, ...], lower: bool) -> np.ndarray:
    """Greatest lower (or least upper) bound of every pair"""
    n = len(names)
    rel = leq if lower else leq.T
    table = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(a, n):
            bounds = np.flatnonzero(rel[:, a] & rel[:, b])
            # the best bound dominates every other bound
            best = [c for c in bounds if rel[bounds, c].all()]
            if not best:
                kind = "greatest lower" if lower else "least upper"
                raise LatticeAxiomError(
                    AxiomViolation.NOT_A_LATTICE_ORDER,
                    (names[a], names[b]),
                    f"no {kind} bound of {names[a]} and {names[b]}",
                )
            table[a, b] = table[b, a] = best[0]
    return table


def _check_monoid(tensor: np.ndarray, names: Tuple[str, ...], top: int) -> None:
    n = len(names)
    asym = np.argwhere(tensor != tensor.T)
    if asym.size:
        a, b = (int(v) for v in asym[0])
        raise LatticeAxiomError(
            AxiomViolation.NON_COMMUTATIVE,
            (names[a], names[b]),
            f"{names[a]}*{names[b]} = {names[tensor[a, b]]} but "
            f"{names[b]}*{names[a]} = {names[tensor[b, a]]}",
        )

    left = tensor[tensor[:, :, None], np.arange(n)[None, None, :]]
    right = tensor[np.arange(n)[:, None, None], tensor[None, :, :]]
    bad = np.argwhere(left != right)
    if bad.size:
        a, b, c = (int(v) for v in bad[0])
        raise LatticeAxiomError(
            AxiomViolation.NON_ASSOCIATIVE,
            (names[a], names[b], names[c]),
            f"({names[a]}*{names[b]})*{names[c]} = {names[left[a, b, c]]} but "
            f"{names[a]}*({names[b]}*{names[c]}) = {names[right[a, b, c]]}",
        )

    not_unit = np.flatnonzero(tensor[top] != np.arange(n))
    if not_unit.size:
        a = int(not_unit[0])
        raise LatticeAxiomError(
            AxiomViolation.UNIT_NOT_TOP,
            (names[top], names[a]),
            f"{names[top]}*{names[a]} = {names[tensor[top, a]]}",
        )


def _check_distributive(
    tensor: np.ndarray, join_table: np.ndarray, names: Tuple[str, ...], bottom: int
) -> None:
    n = len(names)
    absorbing = np.flatnonzero(tensor[:, bottom] != bottom)
    if absorbing.size:
        a = int(absorbing[0])
        raise LatticeAxiomError(
            AxiomViolation.JOIN_DISTRIBUTIVITY,
            (names[a], names[bottom]),
            f"{names[a]}*{names[bottom]} = {names[tensor[a, bottom]]}, empty join not preserved",
        )

    left = tensor[np.arange(n)[:, None, None], join_table[None, :, :]]
    right = join_table[tensor[:, :, None], tensor[:, None, :]]
    bad = np.argwhere(left != right)
    if bad.size:
        a, b, c = (int(v) for v in bad[0])
        raise LatticeAxiomError(
            AxiomViolation.JOIN_DISTRIBUTIVITY,
            (names[a], names[b], names[c]),
            f"{names[a]}*({names[b]}∨{names[c]}) = {names[left[a, b, c]]} but "
            f"({names[a]}*{names[b]})∨({names[a]}*{names[c]}) = {names[right[a, b, c]]}",
        )


def _derive_residuum(
    leq: np.ndarray, tensor: np.ndarray, join_table: np.ndarray, bottom: int
) -> np.ndarray:
    """a → b = ⋁{c : a*c ≤ b}"""
    n = leq.shape[0]
    elements = np.arange(n)
    # admissible[a, c, b] is a*c ≤ b
    admissible = leq[tensor[:, :, None], elements[None, None, :]]
    candidates = np.where(admissible, elements[None, :, None], bottom)
    return _fold(join_table, candidates, 1, bottom)


def _check_adjunction(
    leq: np.ndarray, tensor: np.ndarray, residuum_table: np.ndarray, names: Tuple[str, ...]
) -> None:
    n = len(names)
    elements = np.arange(n)
    left = leq[tensor[:, :, None], elements[None, None, :]]
    right = leq[elements[:, None, None], residuum_table[None, :, :]]
    bad = np.argwhere(left != right)
    if bad.size:
        a, b, c = (int(v) for v in bad[0])
        raise LatticeAxiomError(
            AxiomViolation.ADJUNCTION,
            (names[a], names[b], names[c]),
            f"{names[a]}*{names[b]} ≤ {names[c]} is {bool(left[a, b, c])} but "
            f"{names[a]} ≤ {names[b]}→{names[c]} is {bool(right[a, b, c])}",
        )
