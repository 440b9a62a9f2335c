"""
Ornamentation lattices of pointed building sets

This package enumerates the lattice of ornamentations of a pointed building
set, checks its structural properties and computes the maps that relate it
to Tamari, cyclic Tamari and weak-order lattices.

Modules:
    universe: Subsets of [n] as bit masks, digraphs and graphs
    building: Pointed building sets, axiom validation and constructors
    ornament: Ornamentations, their order, meets and joins
    lattice: Enumeration, Hasse diagrams, property checks and isomorphism
    maps: Tree duality, projections, weak order and relations
    symmetry: Group actions, invariant lattices and cyclic Tamari
    geometry: Root vectors, biclosed ornamentations, quasitrivial operations
    verification: The end-to-end acceptance suite
"""

__version__ = "1.0.0"
__author__ = "Ornamentation Lattices Team"

from .building import PointedBuildingSet, PointedSet, digraphical, graphical, left_segment, validate
from .exceptions import CapExceededError, OrnalatError
from .lattice import OrnLattice, enumerate_lattice, iso_check
from .ornament import Ornamentation, join, meet, validate_orn
from .universe import Digraph, Graph
from .verification import AcceptanceSuite, run_acceptance

__all__ = [
    "AcceptanceSuite",
    "CapExceededError",
    "Digraph",
    "Graph",
    "OrnLattice",
    "OrnalatError",
    "Ornamentation",
    "PointedBuildingSet",
    "PointedSet",
    "digraphical",
    "enumerate_lattice",
    "graphical",
    "iso_check",
    "join",
    "left_segment",
    "meet",
    "run_acceptance",
    "validate",
    "validate_orn",
]
