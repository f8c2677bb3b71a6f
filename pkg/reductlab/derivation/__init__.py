"""Derivation operators, concept lattices and infomorphisms"""

from .concepts import ConceptLattice, enumerate_concepts, is_concept, meet_closure
from .infomorphism import (
    Infomorphism,
    attribute_inclusion,
    direct_image,
    identity_infomorphism,
    infomorphism_image,
    infomorphism_preimage,
    object_inclusion,
    preimage,
)
from .modes import DEFAULT_BUDGET, Method, Mode, Strategy
from .operators import (
    Derivations,
    closure,
    down,
    exists_op,
    fca_closure,
    fca_closure_dual,
    forall_op,
    iter_lsubsets,
    lsubset_order,
    rst_closure,
    rst_interior_dual,
    up,
)

__all__ = [
    "DEFAULT_BUDGET",
    "ConceptLattice",
    "Derivations",
    "Infomorphism",
    "Method",
    "Mode",
    "Strategy",
    "attribute_inclusion",
    "closure",
    "direct_image",
    "down",
    "enumerate_concepts",
    "exists_op",
    "fca_closure",
    "fca_closure_dual",
    "forall_op",
    "identity_infomorphism",
    "infomorphism_image",
    "infomorphism_preimage",
    "is_concept",
    "iter_lsubsets",
    "lsubset_order",
    "meet_closure",
    "object_inclusion",
    "preimage",
    "rst_closure",
    "rst_interior_dual",
    "up",
]
