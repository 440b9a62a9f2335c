"""JSON form of pointed building sets: ``{"n": int, "fibers": [[[members...], ...], ...]}``, 1-based."""

import json
from pathlib import Path
from typing import Any, Dict, Union

from ..exceptions import InvalidGroundSetError, SpecParseError
from ..universe.subsets import iter_members, parse_members
from .pointed_building_set import PointedBuildingSet, validate


def building_set_to_dict(b: PointedBuildingSet) -> Dict[str, Any]:
    return {
        "n": b.n,
        "fibers": [[[k + 1 for k in iter_members(mask)] for mask in fiber] for fiber in b.fibers],
    }


def building_set_from_dict(data: Dict[str, Any]) -> PointedBuildingSet:
    """
    Convert the JSON form to masks and validate it.

    Raises:
        SpecParseError: The document does not follow the schema.
        BuildingSetError: The family violates an axiom.
    """
    try:
        n = int(data["n"])
        raw_fibers = data["fibers"]
    except (KeyError, TypeError, ValueError) as e:
        raise SpecParseError(f"building set JSON needs integer 'n' and list 'fibers': {e}") from e
    if not isinstance(raw_fibers, list) or len(raw_fibers) != n:
        raise SpecParseError(f"expected {n} fibers in building set JSON")
    try:
        fibers = [[parse_members(members, n) for members in fiber] for fiber in raw_fibers]
    except (TypeError, ValueError) as e:
        if isinstance(e, InvalidGroundSetError):
            raise
        raise SpecParseError(f"fiber members must be lists of integers: {e}") from e
    return validate(n, fibers)


def load_building_set(path: Union[str, Path]) -> PointedBuildingSet:
    try:
        with open(path) as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise SpecParseError(f"cannot read building set {path}: {e}") from e
    return building_set_from_dict(data)


def save_building_set(b: PointedBuildingSet, path: Union[str, Path]) -> None:
    with open(path, "w") as f:
        json.dump(building_set_to_dict(b), f, indent=2)
