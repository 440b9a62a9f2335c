#!/usr/bin/env python3
"""
End-to-end run of the ornamentation-lattice library.

Walks through the main results on small instances:
1. Lattice sizes (Tamari, topologies, natural posets)
2. Semidistributivity and duality for oriented trees
3. Projection counterexample
4. Cyclic and centrally symmetric Tamari lattices
5. Weak order bridges and biclosed ornamentations
6. The full acceptance suite, saved as JSON and CSV
"""

import argparse
import json
import sys
from pathlib import Path

# Add src to path
sys.path.append("src")

from ornalat import digraphical, enumerate_lattice, graphical, left_segment
from ornalat.geometry import bicl_subposet
from ornalat.lattice import is_semidistributive
from ornalat.maps import find_duality_failure, projection_counterexample, verify_tree_duality, weak312_iso_check
from ornalat.symmetry import csym_atam, cyclic_tamari, verify_csym_ctam
from ornalat.universe import Digraph, Graph
from ornalat.verification import AcceptanceSuite


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[1])
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--output-dir", default="data/example_output")
    args = parser.parse_args(argv)

    print("Testing the ornamentation-lattice library")
    print("=" * 60)
    results = {}

    # 1. Sizes
    print("\n1. Lattice sizes")
    sizes = {
        "tamari": [len(enumerate_lattice(left_segment(n))) for n in range(1, args.max_n + 1)],
        "topologies": [len(enumerate_lattice(graphical(Graph.complete(n)))) for n in range(1, min(args.max_n, 4) + 1)],
        "natural_posets": [
            len(enumerate_lattice(digraphical(Digraph.complete_dag(n)))) for n in range(1, min(args.max_n, 4) + 1)
        ],
    }
    for name, counts in sizes.items():
        print(f"   {name}: {counts}")
    results["sizes"] = sizes

    # 2. Trees
    print("\n2. Oriented trees")
    star = Digraph.in_star(4)
    semidistributive = is_semidistributive(enumerate_lattice(digraphical(star)))
    duality = verify_tree_duality(star)
    print(f"   in-star(4) semidistributive: {semidistributive.passed}")
    print(f"   in-star(4) anti-isomorphic to its reversal: {duality.passed}")
    failure = find_duality_failure(max_n=3)
    if failure is not None:
        edges = [(u + 1, v + 1) for u, v in failure.digraph.edges()]
        print(f"   smallest DAG without the duality: {edges}")
    results["trees"] = {
        "semidistributive": semidistributive.passed,
        "duality": duality.passed,
        "dag_failure": None if failure is None else edges,
    }

    # 3. Projection
    print("\n3. Projection")
    example = projection_counterexample()
    print(f"   projected join:      {example.projected_join.format()}")
    print(f"   join of projections: {example.join_of_projections.format()}")
    results["projection_differs"] = example.differs

    # 4. Cyclic Tamari
    print("\n4. Cyclic Tamari")
    for n in (2, 3):
        lat = csym_atam(n)
        report = verify_csym_ctam(n)
        print(f"   n={n}: {len(lat)} symmetric ornamentations, {len(cyclic_tamari(n))} arc torsion classes, iso={report.passed}")
        results[f"cyclic_tamari_{n}"] = {"elements": len(lat), "longest_chain": lat.longest_chain(), "iso": report.passed}

    # 5. Weak order
    print("\n5. Weak order")
    for n in range(1, min(args.max_n, 4) + 1):
        bridge = weak312_iso_check(n)
        bicl = bicl_subposet(enumerate_lattice(digraphical(Digraph.complete_dag(n))))
        print(f"   n={n}: 312 bridge {bridge.passed}, {len(bicl)} biclosed ornamentations")
        results[f"weak_order_{n}"] = {"bridge": bridge.passed, "biclosed": len(bicl)}

    # 6. Acceptance suite
    print("\n6. Acceptance suite")
    suite = AcceptanceSuite(max_n=args.max_n)
    suite.run(extended=True)
    for line in suite.report_lines():
        print(f"   {line}")
    results["acceptance"] = {"passed": suite.passed, "total": len(suite.results)}

    output_dir = Path(args.output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    suite.save_json(output_dir / "acceptance_results.json")
    suite.save_csv(output_dir / "acceptance_results.csv")
    with open(output_dir / "complete_framework_test_results.json", "w") as f:
        json.dump(results, f, indent=2)

    print("\n" + "=" * 60)
    print(f"Results saved to {output_dir}")
    return 0 if suite.all_passed else 1


if __name__ == "__main__":
    sys.exit(main())
