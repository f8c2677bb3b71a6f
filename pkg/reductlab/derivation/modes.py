"""Mode, strategy and method tags shared across the engine"""

from enum import Enum

DEFAULT_BUDGET = 1_000_000

# Candidate L-subsets evaluated per numpy batch
CHUNK_SIZE = 4096


class Mode(str, Enum):
    """Which theory: formal concepts or property-oriented (rough set) concepts"""

    FCA = "fca"
    RST = "rst"


class Strategy(str, Enum):
    """Concept enumeration strategy"""

    NAIVE = "naive"
    GENERATORS = "generators"


class Method(str, Enum):
    """Reducibility decision method"""

    EXHAUSTIVE = "exhaustive"
    GENERATORS = "generators"
    AUTO = "auto"
