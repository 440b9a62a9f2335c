"""
Group actions on ornamentation lattices.

Modules:
    group_action: Generated permutation groups, invariant ornamentations, sublattice checks
    cyclic_tamari: Signed and rotated cycles, cyclic arc torsion classes and the chain statistic
"""

from .cyclic_tamari import (
    ArcTorsionClass,
    CyclicTamariLattice,
    chain_statistic,
    csym_atam,
    csym_to_ctam,
    ctam_to_csym,
    cyclic_tamari,
    lengths_of,
    longest_chain_witness,
    orn_size,
    rotated_cycle_building_set,
    rotated_cycle_lattice,
    rotated_cycle_map,
    sign_action,
    signed_building_set,
    signed_cycle,
    signed_label,
    signed_labels,
    verify_chain_statistic,
    verify_csym_ctam,
    verify_rotated_cycle_map,
)
from .group_action import GroupAction, enumerate_invariant, invariant_elements, invariant_lattice, is_sublattice

__all__ = [
    "ArcTorsionClass",
    "CyclicTamariLattice",
    "GroupAction",
    "chain_statistic",
    "csym_atam",
    "csym_to_ctam",
    "ctam_to_csym",
    "cyclic_tamari",
    "enumerate_invariant",
    "invariant_elements",
    "invariant_lattice",
    "is_sublattice",
    "lengths_of",
    "longest_chain_witness",
    "orn_size",
    "rotated_cycle_building_set",
    "rotated_cycle_lattice",
    "rotated_cycle_map",
    "sign_action",
    "signed_building_set",
    "signed_cycle",
    "signed_label",
    "signed_labels",
    "verify_chain_statistic",
    "verify_csym_ctam",
    "verify_rotated_cycle_map",
]
