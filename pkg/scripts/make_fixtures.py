"""Regenerate the shipped fixture files under src/leadsto/fixtures/.

PD files are written from the builders; the JSON tables (reference
signatures, Observation-style circumference constants) are computed here
once and then treated as frozen regression data by the tests.
"""

import json
import pathlib

from leadsto.corpus import biconnected_maps
from leadsto.diagram import connected_sum, parse_pd, serialize_pd
from leadsto.invariants import Torus2, Twist, signature_table
from leadsto.planegraph import circumference, dual, wheel_graph
from leadsto.tait import diagram_from_plane_graph, torus_diagram, twist_diagram

OUT = pathlib.Path(__file__).resolve().parent.parent / "src" / "leadsto" / "fixtures"

TREFOIL = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIGURE_EIGHT = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"
KINK = "X[1,1,2,2]"


def write(name, d, comment):
    (OUT / name).write_text(f"# {comment}\n{serialize_pd(d)}\n")


def dual_circumference_k0(k, max_edges):
    """Least k0 such that every 2-connected map with k0..max_edges edges has
    max(circ G, circ G*) >= k, with the largest counterexample size."""
    worst = 0
    counts = {}
    for n in range(2, max_edges + 1):
        gs = biconnected_maps(n)
        counts[n] = len(gs)
        for g in gs:
            if max(circumference(g)[0], circumference(dual(g))[0]) < k:
                worst = max(worst, n)
    return worst + 1, worst, counts


def main():
    OUT.mkdir(exist_ok=True)
    trefoil = parse_pd(TREFOIL)
    fig8 = parse_pd(FIGURE_EIGHT)
    write("trefoil.pd", trefoil, "trefoil, crossing-minimal T(2,3)")
    write("figure_eight.pd", fig8, "figure-eight knot, crossing-minimal (twist knot with 4 crossings)")
    for m in range(2, 10):
        write(f"torus_2_{m}.pd", torus_diagram(m), f"crossing-minimal T(2,{m})")
    for m in range(3, 9):
        write(f"twist_{m}.pd", twist_diagram(m), f"crossing-minimal twist knot with {m} crossings")
    write("nonstrong_8.pd", connected_sum(fig8, fig8),
          "8-crossing projection that is not strong (connected sum of two figure-eights)")
    write("strong_8.pd", diagram_from_plane_graph(wheel_graph(4)),
          "strong 8-crossing projection (Tait graph: wheel with 4 spokes)")
    write("trefoil_sum.pd", connected_sum(trefoil, trefoil), "connected sum of two trefoils")
    write("trefoil_kink.pd", connected_sum(trefoil, parse_pd(KINK)), "trefoil with one added kink")

    targets = [Torus2(m) for m in range(2, 9)] + [Twist(m) for m in range(4, 9)]
    (OUT / "reference_signatures.json").write_text(signature_table(targets) + "\n")

    table = {}
    for k in (3, 4):
        k0, worst, counts = dual_circumference_k0(k, 12)
        table[str(k)] = {"k0": k0, "largest_counterexample_edges": worst}
    table["max_edges"] = 12
    table["maps_per_edge_count"] = {str(n): c for n, c in counts.items()}
    (OUT / "dual_circumference_k0.json").write_text(json.dumps(table, sort_keys=True, indent=1) + "\n")


if __name__ == "__main__":
    main()
