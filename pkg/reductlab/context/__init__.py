"""L-contexts, subcontexts and their file format"""

from .codec import (
    context_document,
    load_context,
    load_lattice,
    parse_context,
    parse_lattice,
    serialize_context,
)
from .model import (
    LContext,
    LSubset,
    SubcontextSelector,
    dual_context,
    extend_by_bottom,
    negate_context,
    random_context,
    restrict,
    restrict_subset,
)

__all__ = [
    "LContext",
    "LSubset",
    "SubcontextSelector",
    "context_document",
    "dual_context",
    "extend_by_bottom",
    "load_context",
    "load_lattice",
    "negate_context",
    "parse_context",
    "parse_lattice",
    "random_context",
    "restrict",
    "restrict_subset",
    "serialize_context",
]
