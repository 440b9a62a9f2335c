"""
Root-vector geometry of ornamentations.

Modules:
    roots: Root vectors, Phi_B, V(rho), closed and coclosed root sets
    biclosed: Biclosed ornamentations, their subposet, quasitrivial operations
"""

from .biclosed import (
    BiclNonLatticeWitness,
    BiclosedSubposet,
    associative_quasitrivial_tables,
    bicl_subposet,
    find_bicl_non_lattice,
    format_table,
    is_associative,
    is_biclosed,
    is_quasitrivial,
    ornamentation_from_table,
    quasitrivial_op,
)
from .roots import RootVector, is_closed, is_coclosed, phi, v_of

__all__ = [
    "BiclNonLatticeWitness",
    "BiclosedSubposet",
    "RootVector",
    "associative_quasitrivial_tables",
    "bicl_subposet",
    "find_bicl_non_lattice",
    "format_table",
    "is_associative",
    "is_biclosed",
    "is_closed",
    "is_coclosed",
    "is_quasitrivial",
    "ornamentation_from_table",
    "phi",
    "quasitrivial_op",
    "v_of",
]
