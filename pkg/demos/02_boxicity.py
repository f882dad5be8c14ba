"""Compute boxicity of small graphs and draw a rectangle representation.

A 4-cycle is not an interval graph, but it is the intersection graph of
four rectangles.  The spider with three legs of length two is a tree that
needs the plane as well.
"""

import sys
from pathlib import Path

from boxkit import Graph, compute_boxicity, decide_box_le, render_svg
from boxkit.graph import complete_graph, cycle_graph, path_graph

spider = Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
cases = {"K5": complete_graph(5), "P6": path_graph(6), "C4": cycle_graph(4),
         "C6": cycle_graph(6), "spider S(2,2,2)": spider}
for name, g in cases.items():
    print(f"box({name}) = {compute_boxicity(g)}")

out = decide_box_le(cycle_graph(4), 2)
print("\nC4 in the plane:")
print(out.representation.to_text(), end="")

target = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("c4.svg")
target.write_text(render_svg(cycle_graph(4), out.representation))
print(f"drawing written to {target}")
