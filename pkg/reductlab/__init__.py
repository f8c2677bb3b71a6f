"""reductlab

Reducts of formal contexts over finite residuated lattices, in formal
concept analysis and rough set theory.
"""

__version__ = "0.1.0"
