"""Build the gadget family and look at what it is made of.

Every gadget grows from a single edge by splitting edges, so each one is a
2-tree (except L1, which also gets a pendant).  The big graph G contains a
copy of L4 and 2k copies of L3; we find them by label.
"""

from boxkit import build_gadget, embedded_subgadget, GadgetSpec
from boxkit.graph import is_2_tree, is_series_parallel

for name in ("L1", "L2", "L3", "L4", "G"):
    g = build_gadget(name)
    print(f"{name:>2}: n={g.n:3d} m={g.m:3d}  series-parallel={is_series_parallel(g)}  "
          f"2-tree={is_2_tree(g)}")

print()
k = 2
G = build_gadget(GadgetSpec("G", k))
print(f"G({k}) has {G.n} vertices; its fan vertices are",
      [G.name_of(v) for v in sorted(G.neighbors(G.vertex("a"))) if G.name_of(v).startswith("c")])

subset, lmap = embedded_subgadget(G, "L4", k)
print("L4 sits on", sorted(lmap.values()))
for side in "ab":
    subset, lmap = embedded_subgadget(G, "L3", k, i=1, side=side)
    print(f"L3 on edge ({side}, c1) uses", sorted(lmap.values()))
