"""
Maps between ornamentation lattices.

Modules:
    duality: Order-reversing bijection for directed trees and the DAG failure search
    projection: Projections along towers of nested building sets
    weak_order: Total orders, inversion sets and the 312-avoiding bridge to Tamari
    relations: Ornamentations of complete graphs as transitive relations
"""

from .duality import (
    DualityFailure,
    TreeDualityReport,
    dag_cover_pair,
    find_duality_failure,
    tree_cover_witnesses,
    tree_dual,
    verify_tree_duality,
)
from .projection import (
    ProjectionCounterexample,
    Tower,
    check_join_preservation,
    check_monotone,
    check_sub_building_set,
    is_sub_building_set,
    pad_building_set,
    projection,
    projection_counterexample,
)
from .relations import is_transitive_relation, ornamentation_to_relation, relation_to_ornamentation
from .weak_order import (
    InversionSet,
    TotalOrder,
    all_orders,
    find_312_pattern,
    inversion_set,
    is_312_avoiding,
    order_from_inversions,
    order_to_orn,
    orn_to_order,
    weak312_iso_check,
    weak_join,
    weak_meet,
    weak_order_poset,
)

__all__ = [
    "DualityFailure",
    "InversionSet",
    "ProjectionCounterexample",
    "TotalOrder",
    "Tower",
    "TreeDualityReport",
    "all_orders",
    "check_join_preservation",
    "check_monotone",
    "check_sub_building_set",
    "dag_cover_pair",
    "find_312_pattern",
    "find_duality_failure",
    "inversion_set",
    "is_312_avoiding",
    "is_sub_building_set",
    "is_transitive_relation",
    "order_from_inversions",
    "order_to_orn",
    "orn_to_order",
    "ornamentation_to_relation",
    "pad_building_set",
    "projection",
    "projection_counterexample",
    "relation_to_ornamentation",
    "tree_cover_witnesses",
    "tree_dual",
    "verify_tree_duality",
    "weak312_iso_check",
    "weak_join",
    "weak_meet",
    "weak_order_poset",
]
