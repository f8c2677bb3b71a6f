"""Builtin chain families

Equidistant n-element chains {0, 1/(n-1), ..., 1} with the Łukasiewicz or
Gödel t-norm, held as exact fractions.
"""

import dataclasses
import re
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict

from reductlab.errors import SpecFormatError

from .residuated import Lattice, LatticeSpec, validate_lattice

_DESCRIPTOR = re.compile(r"^\s*(?P<family>[a-z]+)\s*(?:\(\s*(?P<n>\d+)\s*\))?\s*$")


class TNorm(str, Enum):
    """Supported t-norms on finite chains"""

    LUKASIEWICZ = "lukasiewicz"
    GODEL = "godel"


# Index-level t-norms on the chain 0 < 1 < ... < n-1
_TENSORS: Dict[TNorm, Callable[[int, int, int], int]] = {
    TNorm.LUKASIEWICZ: lambda i, j, n: max(0, i + j - (n - 1)),
    TNorm.GODEL: lambda i, j, n: min(i, j),
}


@lru_cache(maxsize=None)
def builtin_chain(n: int, tnorm: TNorm) -> Lattice:
    """Equidistant n-element chain with the given t-norm.

    Args:
        n: Number of elements, at least 2.
        tnorm: Łukasiewicz or Gödel.

    Returns:
        The validated lattice; element names are the exact values
        (``"0"``, ``"1/2"``, ``"1"``, ...).

    Raises:
        SpecFormatError: If ``n < 2``.
    """
    tnorm = TNorm(tnorm)
    if n < 2:
        raise SpecFormatError(f"a builtin chain needs at least 2 elements, got {n}")

    values = tuple(Fraction(i, n - 1) for i in range(n))
    names = [str(v) for v in values]
    product = _TENSORS[tnorm]
    spec = LatticeSpec(
        elements=names,
        order=[(names[i], names[i + 1]) for i in range(n - 1)],
        tensor={names[i]: [names[product(i, j, n)] for j in range(n)] for i in range(n)},
    )
    lattice = validate_lattice(spec)
    return dataclasses.replace(lattice, values=values, builtin=f"{tnorm.value}({n})")


def boolean_lattice() -> Lattice:
    """The two-element Boolean lattice"""
    return dataclasses.replace(builtin_chain(2, TNorm.GODEL), builtin="boolean")


def parse_builtin(descriptor: str) -> Lattice:
    """Resolve ``lukasiewicz(n)``, ``godel(n)`` or ``boolean``"""
    match = _DESCRIPTOR.match(descriptor or "")
    if match is None:
        raise SpecFormatError(f"unrecognised builtin lattice {descriptor!r}")
    family, size = match.group("family"), match.group("n")

    if family == "boolean" and size is None:
        return boolean_lattice()
    if family in TNorm._value2member_map_ and size is not None:
        return builtin_chain(int(size), TNorm(family))
    raise SpecFormatError(
        f"unrecognised builtin lattice {descriptor!r}; "
        "expected lukasiewicz(n), godel(n) or boolean"
    )
