"""DOT, JSON and tabular exports of enumerated lattices."""

import json
import re
from pathlib import Path
from typing import Any, Dict, List, Union

import pandas as pd

from ..universe.subsets import iter_members
from .enumeration import OrnLattice

_LABEL_PATTERN = re.compile(r'^\s*(\d+)\s*\[label="([^"]*)"\];\s*$')


def lattice_to_dot(lat: OrnLattice) -> str:
    """Hasse diagram in DOT, bottom to top, nodes labelled by their value arrays."""
    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=box];"]
    for k in range(len(lat)):
        lines.append(f'  {k} [label="{lat.label(k)}"];')
    for lo, hi in lat.covers:
        lines.append(f"  {lo} -> {hi};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_dot_labels(text: str) -> Dict[int, str]:
    """Node index -> label, for DOT text written by lattice_to_dot."""
    labels = {}
    for line in text.splitlines():
        match = _LABEL_PATTERN.match(line)
        if match:
            labels[int(match.group(1))] = match.group(2)
    return labels


def lattice_to_dict(lat: OrnLattice) -> Dict[str, Any]:
    """``{"n", "elements", "covers"}`` with 1-based members and 0-based element indices."""
    return {
        "n": lat.building.n,
        "elements": [[[k + 1 for k in iter_members(mask)] for mask in vector] for vector in lat.vectors],
        "covers": [[lo, hi] for lo, hi in lat.covers],
    }


def lattice_to_frame(lat: OrnLattice) -> pd.DataFrame:
    """One row per element: label, rank, cover counts and irreducibility flags."""
    ranks = lat.ranks()
    join_irreducible = set(lat.join_irreducible_indices())
    meet_irreducible = set(lat.meet_irreducible_indices())
    rows: List[Dict[str, Any]] = []
    for k in range(len(lat)):
        rows.append(
            {
                "index": k,
                "label": lat.label(k),
                "rank": ranks[k],
                "lower_covers": bin(lat.lower_covers[k]).count("1"),
                "upper_covers": bin(lat.upper_covers[k]).count("1"),
                "join_irreducible": k in join_irreducible,
                "meet_irreducible": k in meet_irreducible,
            }
        )
    return pd.DataFrame(rows).set_index("index")


def write_dot(lat: OrnLattice, path: Union[str, Path]) -> None:
    Path(path).write_text(lattice_to_dot(lat))


def write_json(lat: OrnLattice, path: Union[str, Path]) -> None:
    with open(path, "w") as f:
        json.dump(lattice_to_dict(lat), f, indent=2)


def write_csv(lat: OrnLattice, path: Union[str, Path]) -> None:
    lattice_to_frame(lat).to_csv(path)
