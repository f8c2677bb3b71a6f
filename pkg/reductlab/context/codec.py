"""Context and lattice documents

Context files are YAML::

    schema: reductlab.context
    schema_version: 1.0.0
    lattice: {builtin: godel(3)}     # inline spec, builtin, or {path: file.yaml}
    attributes: [star]
    objects:
      - [x, '0']
      - [y, 1/2]

Each object row is its label followed by one element name per attribute.
``serialize_context`` is deterministic, so parse/serialize round trips are
byte-exact.
"""

from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import yaml

from reductlab.errors import (
    RaggedMatrixError,
    SpecFormatError,
    UnknownElementError,
)
from reductlab.infrastructure.logging import get_logger
from reductlab.infrastructure.serialization import DocumentKind, VersionManager
from reductlab.lattice import Lattice, LatticeSpec, validate_lattice

from .model import LContext

logger = get_logger(__name__)

_versions = VersionManager()

PathLike = Union[str, Path]


def _read_yaml(text: str, source: Optional[str]) -> Any:
    try:
        return yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise SpecFormatError(f"invalid YAML: {e}", source) from e


def _read_file(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise SpecFormatError(f"cannot read file: {e.strerror or e}", str(path)) from e


def _check_header(document: Dict[str, Any], kind: Optional[DocumentKind], source: Optional[str]) -> None:
    schema = document.pop("schema", None)
    if kind is not None and schema is not None and schema != kind.value:
        raise SpecFormatError(f"expected a {kind.value} document, got {schema!r}", source)
    try:
        _versions.parse_and_check(document.pop("schema_version", None))
    except ValueError as e:
        raise SpecFormatError(str(e), source) from e


# ===== Lattices =====


def parse_lattice(document: Any, base_dir: Optional[Path] = None, source: Optional[str] = None) -> Lattice:
    """Resolve a lattice reference: builtin descriptor, inline spec or path"""
    if isinstance(document, dict) and set(document) == {"path"}:
        path = Path(str(document["path"]))
        if base_dir is not None and not path.is_absolute():
            path = base_dir / path
        return load_lattice(path)
    if isinstance(document, dict):
        document = dict(document)
        _check_header(document, None, source)
    spec = LatticeSpec.from_document(document, source)
    return validate_lattice(spec)


def load_lattice(path: PathLike) -> Lattice:
    """Read and validate a lattice specification file"""
    source = str(path)
    document = _read_yaml(_read_file(path), source)
    logger.debug({"message": "loading lattice", "source": source})
    return parse_lattice(document, Path(path).parent, source)


# ===== Contexts =====


def parse_context(
    document: Union[str, Dict[str, Any]],
    base_dir: Optional[Path] = None,
    source: Optional[str] = None,
) -> LContext:
    """Parse a context document (YAML text or an already-loaded mapping).

    Raises:
        SpecFormatError: Malformed document, unknown element names, ragged
            rows or duplicate labels.
    """
    if isinstance(document, str):
        document = _read_yaml(document, source)
    if not isinstance(document, dict):
        raise SpecFormatError("context document must be a mapping", source)
    document = dict(document)
    _check_header(document, DocumentKind.CONTEXT, source)

    if "lattice" not in document:
        raise SpecFormatError("context document has no 'lattice' entry", source)
    lattice = parse_lattice(document.pop("lattice"), base_dir, source)

    attributes = document.pop("attributes", None) or []
    rows = document.pop("objects", None) or []
    if document:
        raise SpecFormatError(f"unexpected keys {sorted(document)}", source)
    if not isinstance(attributes, list) or not isinstance(rows, list):
        raise SpecFormatError("'attributes' and 'objects' must be lists", source)

    attributes = [str(a) for a in attributes]
    objects: List[str] = []
    matrix: List[List[int]] = []
    for row in rows:
        if not isinstance(row, list) or not row:
            raise SpecFormatError(f"object row {row!r} must be a non-empty list", source)
        label, entries = str(row[0]), [str(e) for e in row[1:]]
        if len(entries) != len(attributes):
            raise RaggedMatrixError(label, len(attributes), len(entries))
        values = []
        for name in entries:
            if name not in lattice.names:
                raise UnknownElementError(name, label)
            values.append(lattice.index(name))
        objects.append(label)
        matrix.append(values)

    return LContext(lattice, tuple(objects), tuple(attributes), matrix)


def load_context(path: PathLike) -> LContext:
    """Read a context file; relative lattice paths resolve against its directory"""
    source = str(path)
    return parse_context(_read_file(path), Path(path).parent, source)


def context_document(ctx: LContext) -> Dict[str, Any]:
    """Mapping form of a context, as written by ``serialize_context``"""
    spec = ctx.lattice.to_spec().model_dump(mode="json", exclude_defaults=True)
    return {
        "schema": DocumentKind.CONTEXT.value,
        "schema_version": str(VersionManager.CURRENT_VERSION),
        "lattice": spec,
        "attributes": list(ctx.attributes),
        "objects": [[label, *row] for label, row in zip(ctx.objects, ctx.rows())],
    }


def serialize_context(ctx: LContext) -> str:
    """Canonical YAML text of a context"""
    return yaml.safe_dump(
        context_document(ctx),
        sort_keys=False,
        allow_unicode=True,
        default_flow_style=None,
        width=1000,
    )
