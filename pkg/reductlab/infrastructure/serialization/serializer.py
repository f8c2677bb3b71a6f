"""Document Serializer

Canonical JSON for result documents: sorted keys, fixed indentation and a
trailing newline, so identical inputs give byte-identical output.
"""

import json
from enum import Enum
from typing import Any, Dict

from .version_manager import VersionManager


class DocumentKind(str, Enum):
    """Kinds of machine-readable documents reductlab emits or reads"""

    CONTEXT = "reductlab.context"
    LATTICE_REPORT = "reductlab.lattice-report"
    CONCEPT_LATTICE = "reductlab.concept-lattice"
    REDUCT_REPORT = "reductlab.reduct-report"
    REDUCT_SEARCH = "reductlab.reduct-search"
    INTERDEFINABILITY = "reductlab.interdefinability-report"


def envelope(kind: DocumentKind, body: Dict[str, Any]) -> Dict[str, Any]:
    """Wrap a document body with its schema name and version"""
    doc = {"schema": kind.value, "schema_version": str(VersionManager.CURRENT_VERSION)}
    doc.update(body)
    return doc


def dumps_document(doc: Dict[str, Any]) -> str:
    """Serialize a document to canonical JSON"""
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
