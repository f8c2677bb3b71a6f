"""Serialization Module

Versioned machine-readable documents.
"""

from .serializer import DocumentKind, dumps_document, envelope
from .version_manager import SchemaVersion, VersionManager

__all__ = ["DocumentKind", "dumps_document", "envelope", "SchemaVersion", "VersionManager"]
