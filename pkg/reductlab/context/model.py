"""L-contexts, L-subsets and subcontext selectors"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Optional, Sequence, Tuple

import numpy as np

from reductlab.errors import (
    CarrierMismatchError,
    DuplicateLabelError,
    RaggedMatrixError,
    SelectorRangeError,
    UnknownLabelError,
)
from reductlab.lattice import Lattice


@dataclass(frozen=True)
class LSubset:
    """A map from a labelled carrier into lattice element indices"""

    carrier: Tuple[str, ...]
    values: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "carrier", tuple(self.carrier))
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if len(self.carrier) != len(self.values):
            raise ValueError(
                f"L-subset has {len(self.values)} values for {len(self.carrier)} carrier members"
            )

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, label: str) -> int:
        return self.values[self.carrier.index(label)]

    @classmethod
    def constant(cls, carrier: Sequence[str], value: int) -> "LSubset":
        return cls(tuple(carrier), tuple(value for _ in carrier))

    @classmethod
    def from_names(
        cls, lattice: Lattice, carrier: Sequence[str], names: Sequence[str]
    ) -> "LSubset":
        return cls(tuple(carrier), tuple(lattice.index(n) for n in names))

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=np.int64)

    def names(self, lattice: Lattice) -> Tuple[str, ...]:
        return tuple(lattice.names[v] for v in self.values)

    def to_document(self, lattice: Lattice) -> Dict[str, str]:
        return dict(zip(self.carrier, self.names(lattice)))


@dataclass(frozen=True, eq=False)
class LContext:
    """An L-context (X, Y, φ) with φ a read-only |X|×|Y| index matrix"""

    lattice: Lattice
    objects: Tuple[str, ...]
    attributes: Tuple[str, ...]
    phi: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "attributes", tuple(self.attributes))
        _check_unique("object", self.objects)
        _check_unique("attribute", self.attributes)

        phi = np.asarray(self.phi)
        if phi.size == 0:
            phi = np.zeros((len(self.objects), len(self.attributes)), dtype=np.int64)
        if phi.ndim != 2 or phi.shape[0] != len(self.objects):
            raise RaggedMatrixError("<matrix>", len(self.objects), phi.shape[0])
        if phi.shape[1] != len(self.attributes):
            raise RaggedMatrixError(self.objects[0], len(self.attributes), phi.shape[1])
        phi = self.lattice.check_indices(phi).copy()
        phi.setflags(write=False)
        object.__setattr__(self, "phi", phi)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LContext):
            return NotImplemented
        return (
            self.lattice == other.lattice
            and self.objects == other.objects
            and self.attributes == other.attributes
            and np.array_equal(self.phi, other.phi)
        )

    def __hash__(self) -> int:
        return hash((self.lattice, self.objects, self.attributes, self.phi.tobytes()))

    def __repr__(self) -> str:
        return (
            f"LContext({self.lattice.label}, |X|={len(self.objects)}, "
            f"|Y|={len(self.attributes)})"
        )

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.objects), len(self.attributes)

    @classmethod
    def from_names(
        cls,
        lattice: Lattice,
        objects: Sequence[str],
        attributes: Sequence[str],
        rows: Sequence[Sequence[str]],
    ) -> "LContext":
        """Build a context from element names, one row per object"""
        matrix = np.zeros((len(objects), len(attributes)), dtype=np.int64)
        for i, row in enumerate(rows):
            if len(row) != len(attributes):
                raise RaggedMatrixError(objects[i], len(attributes), len(row))
            for j, name in enumerate(row):
                matrix[i, j] = lattice.index(name)
        return cls(lattice, tuple(objects), tuple(attributes), matrix)

    def entry(self, obj: str, attr: str) -> int:
        return int(self.phi[self.objects.index(obj), self.attributes.index(attr)])

    def rows(self) -> Tuple[Tuple[str, ...], ...]:
        """Matrix rows as element names"""
        names = self.lattice.names
        return tuple(tuple(names[v] for v in row) for row in self.phi)


def _check_unique(kind: str, labels: Sequence[str]) -> None:
    seen = set()
    for label in labels:
        if label in seen:
            raise DuplicateLabelError(kind, label)
        seen.add(label)


@dataclass(frozen=True)
class SubcontextSelector:
    """Index sets X′ ⊆ X and Y′ ⊆ Y, kept sorted and duplicate-free"""

    objects: Tuple[int, ...]
    attributes: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "objects", tuple(sorted({int(i) for i in self.objects})))
        object.__setattr__(
            self, "attributes", tuple(sorted({int(j) for j in self.attributes}))
        )

    @classmethod
    def full(cls, ctx: LContext) -> "SubcontextSelector":
        return cls(tuple(range(len(ctx.objects))), tuple(range(len(ctx.attributes))))

    @classmethod
    def from_labels(
        cls,
        ctx: LContext,
        objects: Optional[Iterable[str]] = None,
        attributes: Optional[Iterable[str]] = None,
    ) -> "SubcontextSelector":
        """Resolve labels against ``ctx``; ``None`` keeps every member"""
        return cls(
            _resolve("object", ctx.objects, objects),
            _resolve("attribute", ctx.attributes, attributes),
        )

    def validate(self, ctx: LContext) -> "SubcontextSelector":
        for i in self.objects:
            if not 0 <= i < len(ctx.objects):
                raise SelectorRangeError("object", i, len(ctx.objects))
        for j in self.attributes:
            if not 0 <= j < len(ctx.attributes):
                raise SelectorRangeError("attribute", j, len(ctx.attributes))
        return self

    def then(self, inner: "SubcontextSelector") -> "SubcontextSelector":
        """Compose with a selector relative to the restricted context"""
        try:
            return SubcontextSelector(
                tuple(self.objects[i] for i in inner.objects),
                tuple(self.attributes[j] for j in inner.attributes),
            )
        except IndexError:
            raise SelectorRangeError("nested", -1, len(self.objects)) from None

    def includes(self, other: "SubcontextSelector") -> bool:
        """Componentwise X′ ⊇ other.X′ and Y′ ⊇ other.Y′"""
        return set(other.objects) <= set(self.objects) and set(other.attributes) <= set(
            self.attributes
        )

    def is_full(self, ctx: LContext) -> bool:
        return self == SubcontextSelector.full(ctx)

    def labels(self, ctx: LContext) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
        return (
            tuple(ctx.objects[i] for i in self.objects),
            tuple(ctx.attributes[j] for j in self.attributes),
        )

    def to_document(self, ctx: LContext) -> Dict[str, list]:
        objects, attributes = self.labels(ctx)
        return {"objects": list(objects), "attributes": list(attributes)}


def _resolve(
    kind: str, labels: Sequence[str], wanted: Optional[Iterable[str]]
) -> Tuple[int, ...]:
    if wanted is None:
        return tuple(range(len(labels)))
    wanted = list(wanted)
    unknown = [w for w in wanted if w not in labels]
    if unknown:
        raise UnknownLabelError(kind, unknown)
    return tuple(labels.index(w) for w in wanted)


# ===== Constructions =====


def restrict(ctx: LContext, sel: SubcontextSelector) -> LContext:
    """The subcontext (X′, Y′, φ_{X′,Y′})"""
    sel.validate(ctx)
    objects, attributes = sel.labels(ctx)
    matrix = ctx.phi[np.ix_(list(sel.objects), list(sel.attributes))]
    return LContext(ctx.lattice, objects, attributes, matrix)


def restrict_subset(mu: LSubset, indices: Sequence[int]) -> LSubset:
    """μ_{X′} for X′ given as indices into μ's carrier"""
    for i in indices:
        if not 0 <= i < len(mu.carrier):
            raise SelectorRangeError("carrier", i, len(mu.carrier))
    keep = sorted(set(indices))
    return LSubset(tuple(mu.carrier[i] for i in keep), tuple(mu.values[i] for i in keep))


def extend_by_bottom(mu: LSubset, carrier: Sequence[str], lattice: Lattice) -> LSubset:
    """Copy μ′ onto its labels in ``carrier`` and put bottom everywhere else"""
    carrier = tuple(carrier)
    if not set(mu.carrier) <= set(carrier):
        raise CarrierMismatchError(carrier, mu.carrier)
    given = dict(zip(mu.carrier, mu.values))
    return LSubset(carrier, tuple(given.get(label, lattice.bottom) for label in carrier))


def negate_context(ctx: LContext) -> LContext:
    """Entrywise ¬φ"""
    return LContext(ctx.lattice, ctx.objects, ctx.attributes, ctx.lattice.negation_table[ctx.phi])


def dual_context(ctx: LContext) -> LContext:
    """φ^op: objects and attributes swap roles"""
    return LContext(ctx.lattice, ctx.attributes, ctx.objects, ctx.phi.T)


def random_context(
    lattice: Lattice,
    n_objects: int,
    n_attributes: int,
    rng: np.random.Generator,
) -> LContext:
    """Context with independent uniformly drawn entries"""
    matrix = rng.integers(0, lattice.size, size=(n_objects, n_attributes))
    return LContext(
        lattice,
        tuple(f"x{i}" for i in range(n_objects)),
        tuple(f"y{j}" for j in range(n_attributes)),
        matrix,
    )
