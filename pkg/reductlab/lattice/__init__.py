"""Finite complete residuated lattices and builtin chains"""

from .chains import TNorm, boolean_lattice, builtin_chain, parse_builtin
from .residuated import (
    Lattice,
    LatticeSpec,
    join_all,
    meet_all,
    negation,
    residuum,
    satisfies_dne,
    validate_lattice,
)

__all__ = [
    "Lattice",
    "LatticeSpec",
    "TNorm",
    "boolean_lattice",
    "builtin_chain",
    "join_all",
    "meet_all",
    "negation",
    "parse_builtin",
    "residuum",
    "satisfies_dne",
    "validate_lattice",
]
