"""
Structural checks on ornamentation lattices.

Semidistributivity is tested cover by cover: for x covered by y the set of
elements below y but not below x must have a unique minimal element, and the
set of elements above x but not above y a unique maximal element. Minimal
elements of the first set are join-irreducible and maximal elements of the
second are meet-irreducible, so only irreducibles are scanned.
"""

from dataclasses import dataclass, field
from typing import Any, List, Tuple

from ..building.pointed_building_set import (
    PointedBuildingSet,
    acyclicity_witness,
    fiber_join_irreducibles,
    fibers_are_chains,
    has_unit_step_fibers,
    is_acyclic,
)
from ..exceptions import PreconditionError, PreconditionNotAcyclicError
from ..ornament.operations import join, largest_between, meet, principal_embed
from ..ornament.ornamentation import Ornamentation
from ..universe.subsets import bit, is_subset, iter_members, lowest_member, popcount
from ..utils.debug import debug as logger
from ..utils.debug import summarize_for_logging
from .enumeration import OrnLattice
from .poset import FinitePoset


@dataclass
class PropertyReport:
    """
    Outcome of a lattice check.

    Attributes:
        passed: Whether the property holds.
        witness: The first offending object when it does not.
        detail: Human readable explanation of the witness.
        checked: Number of cases inspected.
    """

    passed: bool
    witness: Any = None
    detail: str = ""
    checked: int = 0

    def __bool__(self) -> bool:
        return self.passed


def lower_difference_minima(poset: FinitePoset, x: int, y: int) -> List[int]:
    """Minimal elements of {z <= y} minus {z <= x}, by direct scan."""
    region = poset.down[y] & ~poset.down[x]
    return [z for z in iter_members(region) if poset.down[z] & region == bit(z)]


def upper_difference_maxima(poset: FinitePoset, x: int, y: int) -> List[int]:
    """Maximal elements of {z >= x} minus {z >= y}, by direct scan."""
    region = poset.up[x] & ~poset.up[y]
    return [z for z in iter_members(region) if poset.up[z] & region == bit(z)]


def is_semidistributive(poset: FinitePoset) -> PropertyReport:
    """
    Cover-wise semidistributivity test.

    Returns:
        PropertyReport: ``witness`` is (x, y, side) for the first failing
        cover, side being "join" or "meet".
    """
    m = len(poset)
    join_irreducibles = [(j, lowest_member(poset.lower_covers[j])) for j in poset.join_irreducible_indices()]
    meet_irreducibles = [(k, lowest_member(poset.upper_covers[k])) for k in poset.meet_irreducible_indices()]

    for x in range(m):
        minimal_candidates = 0
        for j, j_lower in join_irreducibles:
            if poset.down[x] >> j_lower & 1 and not poset.down[x] >> j & 1:
                minimal_candidates |= bit(j)
        for y in iter_members(poset.upper_covers[x]):
            minima = minimal_candidates & poset.down[y]
            if popcount(minima) != 1:
                logger.info(f"join-semidistributivity fails at cover {x} < {y}")
                return PropertyReport(
                    False,
                    (x, y, "join"),
                    f"elements below {y} but not below {x} have minima {list(iter_members(minima))}",
                    len(poset.covers),
                )

    for y in range(m):
        maximal_candidates = 0
        for k, k_upper in meet_irreducibles:
            if poset.up[y] >> k_upper & 1 and not poset.up[y] >> k & 1:
                maximal_candidates |= bit(k)
        for x in iter_members(poset.lower_covers[y]):
            maxima = maximal_candidates & poset.up[x]
            if popcount(maxima) != 1:
                logger.info(f"meet-semidistributivity fails at cover {x} < {y}")
                return PropertyReport(
                    False,
                    (x, y, "meet"),
                    f"elements above {x} but not above {y} have maxima {list(iter_members(maxima))}",
                    len(poset.covers),
                )

    return PropertyReport(True, checked=len(poset.covers))


def join_irreducibles(lat: OrnLattice) -> List[Ornamentation]:
    """Join-irreducible ornamentations (exactly one lower cover)."""
    return [lat.elements[k] for k in lat.join_irreducible_indices()]


def principal_join_irreducibles(b: PointedBuildingSet) -> List[Ornamentation]:
    """Principal embeddings of the join-irreducible members of each fiber, sorted."""
    return sorted(principal_embed(b, pointed) for pointed in fiber_join_irreducibles(b))


def is_atomic(poset: FinitePoset) -> bool:
    """True iff every element is the join of the atoms below it."""
    bottom = poset.bottom()
    if bottom is None:
        raise PreconditionError("atomicity needs a bottom element")
    atoms = poset.atoms()
    for x in range(len(poset)):
        acc = bottom
        for a in atoms:
            if poset.leq(a, x):
                acc = poset.join_index(acc, a)
                if acc is None:
                    raise PreconditionError("atomicity needs a lattice")
        if acc != x:
            return False
    return True


def longest_chain(poset: FinitePoset) -> int:
    return poset.longest_chain()


def changed_coordinates(lower: Ornamentation, upper: Ornamentation) -> List[int]:
    return [i for i, (a, b) in enumerate(zip(lower.values, upper.values)) if a != b]


def multi_coordinate_covers(lat: OrnLattice) -> List[Tuple[int, int, List[int]]]:
    """Covers (x, y, changed coordinates) that change more than one coordinate."""
    result = []
    for x, y in lat.covers:
        changed = changed_coordinates(lat.elements[x], lat.elements[y])
        if len(changed) > 1:
            result.append((x, y, changed))
    return result


@dataclass
class CoverReport:
    """Result of checking the cover lemma for acyclic building sets."""

    checked: int = 0
    union_pair_checked: bool = False
    violations: List[Tuple[int, int, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.passed


def covers_acyclic(b: PointedBuildingSet, lat: OrnLattice) -> CoverReport:
    """
    Check the cover lemma on every cover of an acyclic building set.

    Each cover must change a single coordinate i, and either sigma(i) is the
    union of rho(j) over some member S of fiber i, or rho(i) is covered by
    sigma(i) inside the fiber. When every fiber cover adds one element,
    sigma(i) must also equal rho(i) | rho(j) for some j.

    Raises:
        PreconditionNotAcyclicError: b is not acyclic.
    """
    witness = acyclicity_witness(b)
    if witness is not None:
        raise PreconditionNotAcyclicError(*witness)
    unit_steps = has_unit_step_fibers(b)
    report = CoverReport(union_pair_checked=unit_steps)
    for x, y in lat.covers:
        report.checked += 1
        rho, sigma = lat.elements[x].values, lat.elements[y].values
        changed = changed_coordinates(lat.elements[x], lat.elements[y])
        if len(changed) != 1:
            report.violations.append((x, y, f"changes coordinates {[i + 1 for i in changed]}"))
            continue
        i = changed[0]
        fiber = b.fibers[i]
        spanned = False
        for member in fiber:
            union = 0
            for j in iter_members(member):
                union |= rho[j]
            if union == sigma[i]:
                spanned = True
                break
        fiber_cover = not any(
            mid not in (rho[i], sigma[i]) and is_subset(rho[i], mid) and is_subset(mid, sigma[i]) for mid in fiber
        )
        if not (spanned or fiber_cover):
            report.violations.append((x, y, f"coordinate {i + 1} satisfies neither alternative"))
            continue
        if unit_steps and not any(rho[i] | rho[j] == sigma[i] for j in range(b.n)):
            report.violations.append((x, y, f"coordinate {i + 1} is not rho(i) | rho(j) for any j"))
    if report.violations:
        logger.warning(f"cover lemma violations: {summarize_for_logging(report.violations)}")
    return report


def chain_fiber_witnesses(
    b: PointedBuildingSet, rho: Ornamentation, sigma: Ornamentation
) -> Tuple[Ornamentation, Ornamentation]:
    """
    Explicit semidistributivity witnesses for a cover rho < sigma.

    For acyclic building sets with chain fibers, mu_down is the singleton
    ornamentation except at the changed coordinate i, where it takes the
    smallest fiber member strictly above rho(i). mu_up is the greatest
    ornamentation above rho whose value at i stays strictly below sigma(i);
    the pointwise bound alone (fiber maxima, that member at i) is in general
    not transitively closed.
    """
    if not is_acyclic(b) or not fibers_are_chains(b):
        raise PreconditionError("explicit witnesses need an acyclic building set with chain fibers")
    changed = changed_coordinates(rho, sigma)
    if len(changed) != 1:
        raise PreconditionError("rho and sigma must differ in exactly one coordinate")
    i = changed[0]
    fiber = b.fibers[i]
    above = [mask for mask in fiber if mask != rho[i] and is_subset(rho[i], mask)]
    below = [mask for mask in fiber if mask != sigma[i] and is_subset(mask, sigma[i])]
    down_values = [bit(k) for k in range(b.n)]
    down_values[i] = min(above, key=popcount)
    ceiling = [b.max_member(k) for k in range(b.n)]
    ceiling[i] = max(below, key=popcount)
    return Ornamentation(tuple(down_values)), largest_between(b, rho.values, ceiling)


def verify_lattice_operations(lat: OrnLattice) -> PropertyReport:
    """
    Compare the meet and join formulas with the order-theoretic bounds on all pairs.

    Returns:
        PropertyReport: ``witness`` is (x, y, operation) for the first pair
        whose formula result differs from the least upper (greatest lower)
        bound read off the order.
    """
    b = lat.building
    elements = lat.elements
    checked = 0
    for x in range(len(lat)):
        for y in range(x, len(lat)):
            checked += 1
            pair = (elements[x], elements[y])
            lub = lat.join_index(x, y)
            formula_join = lat.index.get(join(b, pair).values)
            if lub is None or formula_join != lub:
                return PropertyReport(False, (x, y, "join"), "join formula disagrees with the order", checked)
            glb = lat.meet_index(x, y)
            formula_meet = lat.index.get(meet(b, pair).values)
            if glb is None or formula_meet != glb:
                return PropertyReport(False, (x, y, "meet"), "meet formula disagrees with the order", checked)
    return PropertyReport(True, checked=checked)


def principal_irreducibles_match(lat: OrnLattice) -> PropertyReport:
    """Compare cover-based join-irreducibles with the principal embeddings of fiber irreducibles."""
    from_covers = sorted(join_irreducibles(lat))
    from_fibers = principal_join_irreducibles(lat.building)
    if from_covers == from_fibers:
        return PropertyReport(True, checked=len(from_covers))
    return PropertyReport(
        False,
        (from_covers, from_fibers),
        f"{len(from_covers)} irreducibles from covers, {len(from_fibers)} from fibers",
    )
