"""The small geometric facts the lemma checks lean on.

Closed boxes touch when they share a boundary, so a "rectangle" formed by
intersecting two boxes can be a segment or a point, and then its corner
points coincide.
"""

from boxkit import make_box
from boxkit.geometry import (box_diff_hits, box_in_union, corner_points, helly_witness,
                             is_crossing_pair)

x = make_box(0, 2, 0, 2)
y = make_box(2, 3, 0, 1)
print("x & y is the segment x=2, 0<=y<=1; corners:", corner_points(x, y))

horizontal = make_box(0, 4, 1, 2)
vertical = make_box(1, 2, 0, 4)
print("a plus sign is a crossing pair:", is_crossing_pair(None, horizontal, vertical))

c = make_box(1, 3, 1, 3)
a = make_box(0, 2, 0, 4)
b = make_box(2, 4, 0, 4)
print("c lies inside a | b:", box_in_union(c, a, b))
print("c meets a - b:", box_diff_hits(c, a, b))
print("common point of three pairwise-meeting boxes:", helly_witness(a, b, c))
