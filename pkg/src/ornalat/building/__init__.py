"""
Pointed building sets: representation, axiom validation and constructors.

Classes:
    PointedSet: A subset with a distinguished member
    PointedBuildingSet: Per-point families of subsets (the fibers)
"""

from .constructors import (
    boolean_tower_level,
    chain_tower_level,
    check_building_set,
    digraphical,
    from_building_set_all_points,
    from_building_set_min_points,
    from_union_closed_family,
    graphical,
    left_segment,
    pointwise_union_closure,
    union_of_fibers,
)
from .pointed_building_set import (
    PointedBuildingSet,
    PointedSet,
    acyclicity_witness,
    fiber_atoms,
    fiber_covers,
    fiber_join_irreducibles,
    fibers_are_atomic,
    fibers_are_chains,
    has_unit_step_fibers,
    is_acyclic,
    validate,
)
from .serialization import (
    building_set_from_dict,
    building_set_to_dict,
    load_building_set,
    save_building_set,
)

__all__ = [
    "PointedBuildingSet",
    "PointedSet",
    "acyclicity_witness",
    "boolean_tower_level",
    "building_set_from_dict",
    "building_set_to_dict",
    "chain_tower_level",
    "check_building_set",
    "digraphical",
    "fiber_atoms",
    "fiber_covers",
    "fiber_join_irreducibles",
    "fibers_are_atomic",
    "fibers_are_chains",
    "from_building_set_all_points",
    "from_building_set_min_points",
    "from_union_closed_family",
    "graphical",
    "has_unit_step_fibers",
    "is_acyclic",
    "left_segment",
    "load_building_set",
    "pointwise_union_closure",
    "save_building_set",
    "union_of_fibers",
    "validate",
]
