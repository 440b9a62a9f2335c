"""
Root vectors e_j - e_i attached to building sets and ornamentations.

A set X of roots is closed in Phi when alpha, beta in X with alpha + beta in
Phi forces alpha + beta in X, and coclosed when Phi - X is closed. Two roots
sum to a root only as (e_j - e_i) + (e_k - e_j) = e_k - e_i with k != i.
"""

from typing import AbstractSet, NamedTuple, Set

from ..building.pointed_building_set import PointedBuildingSet
from ..ornament.ornamentation import Ornamentation
from ..universe.subsets import bit, iter_members


class RootVector(NamedTuple):
    """e_pos - e_neg."""

    pos: int
    neg: int

    def format(self) -> str:
        return f"e{self.pos + 1}-e{self.neg + 1}"


def phi(b: PointedBuildingSet) -> Set[RootVector]:
    """Roots e_j - e_i with j != i in some set pointed at i."""
    return {RootVector(j, i) for i in range(b.n) for j in iter_members(b.max_member(i) & ~bit(i))}


def v_of(rho: Ornamentation) -> Set[RootVector]:
    """Roots e_j - e_i with j != i in rho(i)."""
    return {RootVector(j, i) for i, mask in enumerate(rho.values) for j in iter_members(mask & ~bit(i))}


def is_closed(roots: AbstractSet[RootVector], universe: AbstractSet[RootVector]) -> bool:
    for j, i in roots:
        for k, middle in roots:
            if middle == j and k != i and RootVector(k, i) in universe and RootVector(k, i) not in roots:
                return False
    return True


def is_coclosed(roots: AbstractSet[RootVector], universe: AbstractSet[RootVector]) -> bool:
    """Every root of X that splits as a sum of two roots of Phi has a summand in X."""
    for k, i in roots:
        for j, first_neg in universe:
            if first_neg != i or j == k:
                continue
            if RootVector(k, j) in universe and RootVector(j, i) not in roots and RootVector(k, j) not in roots:
                return False
    return True
