"""Version management for reductlab documents

Context files and result documents carry a ``schema_version``; readers check
it before interpreting the rest of the document.
"""

import logging
from dataclasses import dataclass
from typing import Any, Optional, Tuple

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class SchemaVersion:
    """Semantic version of a document schema"""

    major: int
    minor: int
    patch: int

    def __str__(self) -> str:
        return f"{self.major}.{self.minor}.{self.patch}"

    @classmethod
    def from_string(cls, version_str: str) -> "SchemaVersion":
        """Parse version string (e.g., "1.2.3")"""
        parts = str(version_str).strip().split(".")
        if len(parts) != 3 or not all(p.isdigit() for p in parts):
            raise ValueError(f"Invalid version string: {version_str}")

        return cls(major=int(parts[0]), minor=int(parts[1]), patch=int(parts[2]))

    def is_compatible_with(self, other: "SchemaVersion") -> bool:
        """Check whether a reader at ``self`` understands documents at ``other``"""
        # Same major, and the document is not from a newer minor
        return self.major == other.major and self.minor >= other.minor


class VersionManager:
    """Owns the schema version reductlab reads and writes"""

    CURRENT_VERSION = SchemaVersion(1, 0, 0)

    MIN_SUPPORTED_VERSION = SchemaVersion(1, 0, 0)

    def check_compatibility(
        self, document_version: SchemaVersion
    ) -> Tuple[bool, Optional[str]]:
        """Check if a document version can be read

        Returns:
            Tuple of (is_compatible, error_message)
        """
        if document_version < self.MIN_SUPPORTED_VERSION:
            return (
                False,
                f"Version {document_version} is below minimum supported version {self.MIN_SUPPORTED_VERSION}",
            )

        if not self.CURRENT_VERSION.is_compatible_with(document_version):
            return (
                False,
                f"Document version {document_version} is not readable by {self.CURRENT_VERSION}",
            )

        return True, None

    def parse_and_check(self, raw: Any) -> SchemaVersion:
        """Parse a ``schema_version`` field; missing means current

        Raises:
            ValueError: If the version is malformed or unsupported.
        """
        if raw is None:
            return self.CURRENT_VERSION
        version = SchemaVersion.from_string(str(raw))
        ok, message = self.check_compatibility(version)
        if not ok:
            raise ValueError(message)
        if version != self.CURRENT_VERSION:
            logger.debug(f"reading schema {version} with reader {self.CURRENT_VERSION}")
        return version
