"""
Ornamentation lattices: enumeration, Hasse diagrams and structural checks.

Classes:
    FinitePoset: Poset of mask vectors under componentwise inclusion
    OrnLattice: Enumerated ornamentation lattice of a pointed building set
    PropertyReport: Verdict and witness of a lattice check
    CoverReport: Result of the cover lemma check
    IsomorphismResult: Verdict and bijection of iso_check
"""

from .enumeration import OrnLattice, assignment_order, enumerate_lattice, enumerate_ornamentations
from .export import (
    lattice_to_dict,
    lattice_to_dot,
    lattice_to_frame,
    read_dot_labels,
    write_csv,
    write_dot,
    write_json,
)
from .isomorphism import IsomorphismResult, is_order_isomorphism, iso_check
from .poset import FinitePoset
from .properties import (
    CoverReport,
    PropertyReport,
    chain_fiber_witnesses,
    changed_coordinates,
    covers_acyclic,
    is_atomic,
    is_semidistributive,
    join_irreducibles,
    longest_chain,
    lower_difference_minima,
    multi_coordinate_covers,
    principal_irreducibles_match,
    principal_join_irreducibles,
    upper_difference_maxima,
    verify_lattice_operations,
)

__all__ = [
    "CoverReport",
    "FinitePoset",
    "IsomorphismResult",
    "OrnLattice",
    "PropertyReport",
    "assignment_order",
    "chain_fiber_witnesses",
    "changed_coordinates",
    "covers_acyclic",
    "enumerate_lattice",
    "enumerate_ornamentations",
    "is_atomic",
    "is_order_isomorphism",
    "is_semidistributive",
    "iso_check",
    "join_irreducibles",
    "lattice_to_dict",
    "lattice_to_dot",
    "lattice_to_frame",
    "longest_chain",
    "lower_difference_minima",
    "multi_coordinate_covers",
    "principal_irreducibles_match",
    "principal_join_irreducibles",
    "read_dot_labels",
    "upper_difference_maxima",
    "verify_lattice_operations",
    "write_csv",
    "write_dot",
    "write_json",
]
