#!/usr/bin/env python3
"""
Command-line front end for ornamentation lattices.

Builds a pointed building set from a spec flag, runs one computation and
prints a short report. Exit codes: 0 success, 1 a check failed, 2 bad input
or a violated precondition, 3 enumeration cap exceeded.
"""

import argparse
import json
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .building.constructors import digraphical, graphical, left_segment
from .building.pointed_building_set import (
    PointedBuildingSet,
    acyclicity_witness,
    fibers_are_chains,
)
from .building.serialization import load_building_set
from .exceptions import CapExceededError, OrnalatError, SpecParseError
from .geometry.biclosed import (
    associative_quasitrivial_tables,
    bicl_subposet,
    format_table,
    is_associative,
    is_biclosed,
    quasitrivial_op,
)
from .lattice.enumeration import OrnLattice, enumerate_lattice
from .lattice.export import write_csv, write_dot, write_json
from .lattice.properties import covers_acyclic, is_atomic, is_semidistributive
from .maps.duality import verify_tree_duality
from .maps.projection import check_join_preservation, check_monotone, check_sub_building_set, projection_counterexample
from .maps.weak_order import weak312_iso_check
from .ornament.ornamentation import ornamentation_from_dict
from .symmetry.cyclic_tamari import (
    chain_statistic,
    csym_atam,
    cyclic_tamari,
    longest_chain_witness,
    signed_building_set,
    signed_labels,
    verify_chain_statistic,
    verify_csym_ctam,
)
from .universe.graphs import Digraph, Graph, load_edge_list
from .utils.debug import debug, debug_cli as logger
from .utils.logging_config import set_level
from .verification import AcceptanceSuite

_SHORTHAND = re.compile(r"^([KCPSE])(\d+)$")

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_CAP = 3


@dataclass(frozen=True)
class BuildingSpec:
    """
    A building set named on the command line.

    Attributes:
        kind: One of digraph, graph, interval, cycle, signed-cycle, custom.
        value: Shorthand, file path or size, as typed.
    """

    kind: str
    value: str

    def _size(self) -> int:
        try:
            n = int(self.value)
        except ValueError as e:
            raise SpecParseError(f"--{self.kind} expects an integer, got {self.value!r}") from e
        if n < 1:
            raise SpecParseError(f"--{self.kind} expects a positive integer, got {n}")
        return n

    def graph(self) -> Graph:
        match = _SHORTHAND.match(self.value)
        if match:
            return _graph_from_shorthand(match.group(1), int(match.group(2)))
        return Graph.from_edges(*load_edge_list(self.value))

    def digraph(self) -> Digraph:
        if self.kind == "graph":
            return self.graph().as_digraph()
        match = _SHORTHAND.match(self.value)
        if match:
            return _digraph_from_shorthand(match.group(1), int(match.group(2)))
        return Digraph.from_edges(*load_edge_list(self.value))

    def build(self) -> Tuple[PointedBuildingSet, Optional[List[str]]]:
        """The validated building set and optional display labels."""
        if self.kind == "interval":
            return left_segment(self._size()), None
        if self.kind == "cycle":
            n = self._size()
            return digraphical(Digraph.cycle(n) if n > 1 else Digraph.edgeless(1)), None
        if self.kind == "signed-cycle":
            n = self._size()
            return signed_building_set(n), signed_labels(n)
        if self.kind == "custom":
            return load_building_set(self.value), None
        if self.kind == "graph":
            return graphical(self.graph()), None
        return digraphical(self.digraph()), None


def _digraph_from_shorthand(letter: str, n: int) -> Digraph:
    builders: Dict[str, Callable[[int], Digraph]] = {
        "K": Digraph.complete_dag,
        "C": Digraph.cycle,
        "P": Digraph.path,
        "S": Digraph.in_star,
        "E": Digraph.edgeless,
    }
    return builders[letter](n)


def _graph_from_shorthand(letter: str, n: int) -> Graph:
    builders: Dict[str, Callable[[int], Graph]] = {
        "K": Graph.complete,
        "C": Graph.cycle,
        "P": Graph.path,
        "S": Graph.star,
        "E": Graph.edgeless,
    }
    return builders[letter](n)


def spec_from_args(args: argparse.Namespace) -> BuildingSpec:
    for kind in ("digraph", "graph", "interval", "cycle", "signed-cycle", "custom"):
        value = getattr(args, kind.replace("-", "_"), None)
        if value is not None:
            return BuildingSpec(kind, str(value))
    raise SpecParseError("a building set is required: --digraph, --graph, --interval, --cycle, --signed-cycle or --custom")


def _lattice(args: argparse.Namespace, b: PointedBuildingSet, labels=None) -> OrnLattice:
    return enumerate_lattice(b, args.cap, args.threads, labels)


def _export(args: argparse.Namespace, lat: OrnLattice) -> None:
    if getattr(args, "dot", None):
        write_dot(lat, args.dot)
        logger.info(f"wrote Hasse diagram to {args.dot}")
    if getattr(args, "json", None):
        write_json(lat, args.json)
        logger.info(f"wrote lattice JSON to {args.json}")
    if getattr(args, "csv", None):
        write_csv(lat, args.csv)
        logger.info(f"wrote element table to {args.csv}")


def _print_summary(lat: OrnLattice) -> None:
    print(f"elements: {len(lat)}")
    print(f"covers: {len(lat.covers)}")
    print(f"longest chain: {lat.longest_chain()}")


# Subcommands


def cmd_enumerate(args: argparse.Namespace) -> int:
    b, labels = spec_from_args(args).build()
    lat = _lattice(args, b, labels)
    _print_summary(lat)
    _export(args, lat)
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    b, labels = spec_from_args(args).build()
    selected = [name for name in ("semidistributive", "atomic", "acyclic", "chain_fibers", "cover_lemma") if getattr(args, name)]
    if not selected:
        selected = ["semidistributive", "atomic", "acyclic", "chain_fibers"]
    lat = _lattice(args, b, labels) if {"semidistributive", "atomic", "cover_lemma"} & set(selected) else None
    failed = False
    for name in selected:
        label = name.replace("_", "-")
        if name == "semidistributive":
            report = is_semidistributive(lat)
            ok, witness = report.passed, report.detail
        elif name == "atomic":
            ok, witness = is_atomic(lat), "some element is not a join of atoms"
        elif name == "acyclic":
            pair = acyclicity_witness(b)
            ok = pair is None
            witness = "" if ok else f"{pair[0] + 1} and {pair[1] + 1} lie in sets pointed at each other"
        elif name == "chain_fibers":
            ok, witness = fibers_are_chains(b), "some fiber is not a chain"
        else:
            cover_report = covers_acyclic(b, lat)
            ok = cover_report.passed
            witness = "; ".join(f"{lat.label(x)} < {lat.label(y)}: {why}" for x, y, why in cover_report.violations[:3])
        print(f"PASS {label}" if ok else f"FAIL {label}: {witness}")
        failed = failed or not ok
    return EXIT_FAIL if failed else EXIT_OK


def cmd_dual(args: argparse.Namespace) -> int:
    spec = spec_from_args(args)
    if spec.kind not in ("digraph", "graph"):
        raise SpecParseError("dual needs --digraph")
    report = verify_tree_duality(spec.digraph(), args.cap, args.threads)
    print(f"elements: {report.size} / dual elements: {report.dual_size}")
    for name in ("bijective", "order_reversing", "roundtrip", "anti_isomorphic"):
        print(f"{'PASS' if getattr(report, name) else 'FAIL'} {name.replace('_', '-')}")
    for failure in report.failures:
        print(f"  {failure}")
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_project(args: argparse.Namespace) -> int:
    if args.small is None or args.big is None:
        example = projection_counterexample()
        print(f"sigma: {example.sigma.format()}")
        print(f"rho: {example.rho.format()}")
        print(f"projection of the join: {example.projected_join.format()}")
        print(f"join of the projections: {example.join_of_projections.format()}")
        print("projection is not a lattice map" if example.differs else "join preserved")
        return EXIT_OK
    small, big = load_building_set(args.small), load_building_set(args.big)
    check_sub_building_set(small, big)
    lat = _lattice(args, big)
    monotone = check_monotone(small, big, lat)
    print(f"{'PASS' if monotone else 'FAIL'} monotone")
    joins = check_join_preservation(small, big, lat)
    if joins:
        print("joins preserved")
    else:
        first, second = joins.witness
        print(f"join not preserved: {first.format()} v {second.format()}")
    return EXIT_OK if monotone else EXIT_FAIL


def cmd_weak312(args: argparse.Namespace) -> int:
    report = weak312_iso_check(args.n)
    print(f"{'PASS' if report else 'FAIL'} weak312 n={args.n}: {report.detail}")
    return EXIT_OK if report else EXIT_FAIL


def cmd_csym_atam(args: argparse.Namespace) -> int:
    lat = csym_atam(args.n, args.cap)
    _print_summary(lat)
    _export(args, lat)
    return EXIT_OK


def cmd_ctam(args: argparse.Namespace) -> int:
    ctam = cyclic_tamari(args.n)
    print(f"arc torsion classes: {len(ctam)}")
    if args.list:
        for arcs in ctam.classes:
            print(arcs.format())
    report = verify_csym_ctam(args.n, args.cap)
    print(f"{'PASS' if report else 'FAIL'} isomorphic to the signed lattice: {report.detail}")
    return EXIT_OK if report else EXIT_FAIL


def cmd_chain_stat(args: argparse.Namespace) -> int:
    labels = signed_labels(args.n)
    for rho in longest_chain_witness(args.n):
        print(f"{chain_statistic(args.n, rho):4d}  {rho.format(labels)}")
    report = verify_chain_statistic(args.n)
    print(f"{'PASS' if report else 'FAIL'} chain statistic: {report.detail}")
    return EXIT_OK if report else EXIT_FAIL


def cmd_biclosed(args: argparse.Namespace) -> int:
    b, labels = spec_from_args(args).build()
    subposet = bicl_subposet(_lattice(args, b, labels))
    print(f"biclosed elements: {len(subposet)}")
    if subposet.is_lattice:
        print("biclosed subposet is a lattice")
        return EXIT_OK
    x, y = (subposet.missing_joins or subposet.missing_meets)[0]
    kind = "join" if subposet.missing_joins else "meet"
    print(f"no {kind} in the subposet for {subposet.poset.label(x)} and {subposet.poset.label(y)}")
    return EXIT_OK


def cmd_quasitrivial(args: argparse.Namespace) -> int:
    b = graphical(Graph.complete(args.n))
    if args.orn:
        try:
            data = json.loads(Path(args.orn).read_text())
        except (OSError, json.JSONDecodeError) as e:
            raise SpecParseError(f"cannot read ornamentation {args.orn}: {e}") from e
        rho = ornamentation_from_dict(b, data)
        table = quasitrivial_op(rho)
        print(format_table(table))
        print(f"associative: {is_associative(table)}")
        print(f"biclosed: {is_biclosed(b, rho)}")
        return EXIT_OK
    lat = _lattice(args, b)
    biclosed = {quasitrivial_op(rho).tobytes() for rho in lat.elements if is_biclosed(b, rho)}
    associative = {table.tobytes() for table in associative_quasitrivial_tables(args.n)}
    print(f"associative quasitrivial operations: {len(associative)}")
    print(f"biclosed ornamentations: {len(biclosed)}")
    ok = biclosed == associative
    print(f"{'PASS' if ok else 'FAIL'} tables match")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify_all(args: argparse.Namespace) -> int:
    suite = AcceptanceSuite(args.max_n, args.cap, args.threads)
    suite.run(extended=args.extended)
    for line in suite.report_lines():
        print(line)
    if args.json:
        suite.save_json(args.json)
    if args.csv:
        suite.save_csv(args.csv)
    return EXIT_OK if suite.all_passed else EXIT_FAIL


# Parser


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=None, help="maximum number of elements (default ORNALAT_CAP or 100000)")
    common.add_argument("--threads", type=int, default=None, help="worker processes (default ORNALAT_THREADS or 1)")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    return common


def _add_spec(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--digraph", metavar="SHORTHAND|FILE", help="digraphical building set: K3, C4, P5, S4, E2 or an edge list")
    group.add_argument("--graph", metavar="SHORTHAND|FILE", help="graphical building set: K3, C4, P5, S4, E2 or an edge list")
    group.add_argument("--interval", type=int, metavar="N", help="left segments of [N] (Tamari)")
    group.add_argument("--cycle", type=int, metavar="N", help="oriented N-cycle (affine Tamari)")
    group.add_argument("--signed-cycle", type=int, metavar="N", help="signed 2N-cycle with signed labels")
    group.add_argument("--custom", metavar="FILE.json", help="pointed building set in JSON")


def _add_outputs(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--dot", metavar="FILE", help="write the Hasse diagram in DOT")
    parser.add_argument("--json", metavar="FILE", help="write elements and covers as JSON")
    parser.add_argument("--csv", metavar="FILE", help="write the element table as CSV")


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="ornalat", description="Ornamentation lattices of pointed building sets")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="enumerate a lattice")
    _add_spec(p)
    _add_outputs(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", parents=[common], help="check structural properties")
    _add_spec(p)
    p.add_argument("--semidistributive", action="store_true")
    p.add_argument("--atomic", action="store_true")
    p.add_argument("--acyclic", action="store_true")
    p.add_argument("--chain-fibers", action="store_true")
    p.add_argument("--cover-lemma", action="store_true", help="check the cover lemma (acyclic building sets)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("dual", parents=[common], help="verify the duality of a directed tree")
    _add_spec(p)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("project", parents=[common], help="projection between nested building sets")
    p.add_argument("small", nargs="?", help="smaller building set (JSON)")
    p.add_argument("big", nargs="?", help="larger building set (JSON)")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("weak312", parents=[common], help="312-avoiding weak order vs Tamari")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_weak312)

    p = sub.add_parser("csym-atam", parents=[common], help="centrally symmetric affine Tamari lattice")
    p.add_argument("n", type=int)
    _add_outputs(p)
    p.set_defaults(func=cmd_csym_atam)

    p = sub.add_parser("ctam", parents=[common], help="cyclic Tamari lattice of arc torsion classes")
    p.add_argument("n", type=int)
    p.add_argument("--list", action="store_true", help="print every arc torsion class")
    p.set_defaults(func=cmd_ctam)

    p = sub.add_parser("chain-stat", parents=[common], help="chain statistic on the signed lattice")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_chain_stat)

    p = sub.add_parser("biclosed", parents=[common], help="biclosed ornamentations")
    _add_spec(p)
    p.set_defaults(func=cmd_biclosed)

    p = sub.add_parser("quasitrivial", parents=[common], help="quasitrivial operations of the complete graph")
    p.add_argument("n", type=int)
    p.add_argument("--orn", metavar="FILE", help="ornamentation JSON to turn into an operation table")
    p.set_defaults(func=cmd_quasitrivial)

    p = sub.add_parser("verify-all", parents=[common], help="run the acceptance suite")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--extended", action="store_true", help="also run the supplementary checks")
    p.add_argument("--json", metavar="FILE")
    p.add_argument("--csv", metavar="FILE")
    p.set_defaults(func=cmd_verify_all)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    if args.verbose:
        set_level(debug, "INFO")
        set_level(logger, "INFO")
    try:
        return args.func(args)
    except CapExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except OrnalatError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as e:
        logger.error(f"{args.command} failed: {e}", exc_info=True)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
