"""
Ornamentations, their order, and the lattice operations.

Classes:
    Ornamentation: Transitively closed choice of one fiber member per point
"""

from .operations import (
    binary_join,
    binary_meet,
    join,
    largest_between,
    meet,
    ornamentations_between,
    principal_embed,
)
from .ornamentation import (
    Ornamentation,
    is_ornamentation,
    leq,
    maximum,
    minimum,
    ornamentation_from_dict,
    parse_ornamentation_label,
    validate_orn,
)

__all__ = [
    "Ornamentation",
    "binary_join",
    "binary_meet",
    "is_ornamentation",
    "join",
    "largest_between",
    "leq",
    "maximum",
    "meet",
    "minimum",
    "ornamentation_from_dict",
    "ornamentations_between",
    "parse_ornamentation_label",
    "principal_embed",
    "validate_orn",
]
