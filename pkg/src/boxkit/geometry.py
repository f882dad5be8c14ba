"""Closed integer intervals, axis-parallel boxes and box representations.

Every predicate here is decided from endpoint comparisons alone, so it is
invariant under any order-preserving relabelling of the coordinates.  That
is what lets the solver work with endpoint orders instead of numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple, Sequence


class GeometryError(ValueError):
    pass


class Interval(NamedTuple):
    lo: int
    hi: int

    def check(self) -> "Interval":
        if self.lo > self.hi:
            raise GeometryError(f"interval [{self.lo}, {self.hi}] has lo > hi")
        return self

    def overlaps(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def within(self, other: "Interval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def cap(self, other: "Interval") -> "Interval | None":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        return Interval(lo, hi) if lo <= hi else None

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi


Box = tuple  # tuple[Interval, ...]


def make_box(*bounds: int | Sequence[int]) -> Box:
    """``make_box(0, 1, 2, 3)`` or ``make_box((0, 1), (2, 3))`` -> [0,1] x [2,3]."""
    if bounds and isinstance(bounds[0], (tuple, list)):
        pairs = bounds
    else:
        if len(bounds) % 2:
            raise GeometryError("need an even number of bounds")
        pairs = [bounds[i:i + 2] for i in range(0, len(bounds), 2)]
    if not pairs:
        raise GeometryError("a box needs at least one dimension")
    return tuple(Interval(int(lo), int(hi)).check() for lo, hi in pairs)


def _same_dim(*boxes: Box) -> int:
    d = len(boxes[0])
    for b in boxes[1:]:
        if len(b) != d:
            raise GeometryError(f"dimension mismatch: {d} vs {len(b)}")
    return d


def _need_2d(*boxes: Box) -> None:
    if _same_dim(*boxes) != 2:
        raise GeometryError("predicate is defined for 2-dimensional boxes only")


def boxes_intersect(x: Box, y: Box) -> bool:
    _same_dim(x, y)
    return all(p.overlaps(q) for p, q in zip(x, y))


def box_within(x: Box, y: Box) -> bool:
    _same_dim(x, y)
    return all(p.within(q) for p, q in zip(x, y))


def point_in_box(pt: Sequence, box: Box) -> bool:
    return all(iv.lo <= t <= iv.hi for t, iv in zip(pt, box))


@dataclass(frozen=True)
class BoxRepresentation:
    """Map vertex index -> box, all boxes of dimension ``d``."""

    d: int
    boxes: tuple

    def __post_init__(self):
        if self.d < 1:
            raise GeometryError("dimension must be at least 1")
        boxes = tuple(tuple(Interval(*iv).check() for iv in b) for b in self.boxes)
        for v, b in enumerate(boxes):
            if len(b) != self.d:
                raise GeometryError(f"vertex {v} has a {len(b)}-box, expected {self.d}")
        object.__setattr__(self, "boxes", boxes)

    @classmethod
    def from_mapping(cls, d: int, mapping: Mapping[int, Box], n: int) -> "BoxRepresentation":
        missing = [v for v in range(n) if v not in mapping]
        if missing:
            raise GeometryError(f"representation misses vertices {missing}")
        return cls(d, tuple(mapping[v] for v in range(n)))

    @property
    def n(self) -> int:
        return len(self.boxes)

    def __getitem__(self, v: int) -> Box:
        return self.boxes[v]

    def projection(self, i: int, v: int) -> Interval:
        """Interval of vertex ``v`` on axis ``i`` (1-based)."""
        return self.boxes[v][i - 1]

    def padded(self, d: int) -> "BoxRepresentation":
        """Same representation in dimension ``d`` >= self.d, extra axes universal."""
        if d < self.d:
            raise GeometryError("cannot pad to a lower dimension")
        return BoxRepresentation(d, tuple(b + (Interval(0, 0),) * (d - self.d) for b in self.boxes))

    def to_text(self) -> str:
        return "".join(
            f"{v} " + " ".join(f"{iv.lo} {iv.hi}" for iv in b) + "\n" for v, b in enumerate(self.boxes))


def parse_representation(text: str) -> BoxRepresentation:
    rows = {}
    d = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            nums = [int(t) for t in line.split()]
        except ValueError:
            raise GeometryError(f"line {lineno}: non-integer token") from None
        if len(nums) < 3 or len(nums) % 2 == 0:
            raise GeometryError(f"line {lineno}: expected 'v l_1 r_1 ... l_d r_d'")
        dd = (len(nums) - 1) // 2
        if d is None:
            d = dd
        elif dd != d:
            raise GeometryError(f"line {lineno}: dimension {dd} differs from {d}")
        v = nums[0]
        if v in rows:
            raise GeometryError(f"line {lineno}: vertex {v} given twice")
        rows[v] = make_box(*nums[1:])
    if d is None:
        raise GeometryError("empty representation")
    return BoxRepresentation.from_mapping(d, rows, max(rows) + 1)


class Violation(NamedTuple):
    u: int
    v: int
    kind: str  # "missing": edge without intersection; "spurious": intersection without edge


def verify_representation(g, rep: BoxRepresentation) -> Violation | None:
    """None if ``rep`` represents ``g`` exactly, else the first offending pair."""
    if rep.n < g.n:
        raise GeometryError(f"representation covers {rep.n} of {g.n} vertices")
    for u in range(g.n):
        bu = rep.boxes[u]
        for v in range(u + 1, g.n):
            meet = all(p.overlaps(q) for p, q in zip(bu, rep.boxes[v]))
            adjacent = g.has_edge(u, v)
            if meet != adjacent:
                return Violation(u, v, "missing" if adjacent else "spurious")
    return None


# predicates used by the rectangle arguments ---------------------------------

class CornerPoints(NamedTuple):
    ll: tuple
    lr: tuple
    rl: tuple
    rr: tuple


def corner_points(x: Box, y: Box) -> CornerPoints:
    """The four extreme points of the rectangle x & y (may coincide)."""
    _need_2d(x, y)
    if not boxes_intersect(x, y):
        raise GeometryError("corner points need intersecting boxes")
    l1, l2 = max(x[0].lo, y[0].lo), max(x[1].lo, y[1].lo)
    r1, r2 = min(x[0].hi, y[0].hi), min(x[1].hi, y[1].hi)
    return CornerPoints((l1, l2), (l1, r2), (r1, l2), (r1, r2))


def contains_corner(c: Box, a: Box, b: Box) -> bool:
    return any(point_in_box(p, c) for p in corner_points(a, b))


def is_crossing_pair(rep: BoxRepresentation | None, u, v) -> bool:
    """Each box's projection contains the other's on opposite axes (non-strict).

    Accepts either a representation and two vertices, or ``None`` and two
    boxes.
    """
    bu, bv = (u, v) if rep is None else (rep[u], rep[v])
    _need_2d(bu, bv)
    return ((bu[0].within(bv[0]) and bv[1].within(bu[1]))
            or (bv[0].within(bu[0]) and bu[1].within(bv[1])))


def box_diff_hits(c: Box, a: Box, b: Box) -> bool:
    """Whether c & (a - b) is non-empty, decided axis by axis."""
    _same_dim(c, a, b)
    caps = [p.cap(q) for p, q in zip(c, a)]
    if any(iv is None for iv in caps):
        return False
    return any(not iv.within(bi) for iv, bi in zip(caps, b))


def interval_in_union(c: Interval, a: Interval, b: Interval) -> bool:
    if c.within(a) or c.within(b):
        return True
    return (a.overlaps(b) and min(a.lo, b.lo) <= c.lo and c.hi <= max(a.hi, b.hi))


def box_in_union(c: Box, a: Box, b: Box) -> bool:
    """Whether every point of the rectangle c lies in a or in b."""
    _need_2d(c, a, b)
    if box_within(c, a) or box_within(c, b):
        return True
    for i, j in ((0, 1), (1, 0)):
        if (c[i].within(a[i]) and c[i].within(b[i])
                and interval_in_union(c[j], a[j], b[j])):
            return True
    return False


def helly_witness(x: Box, y: Box, z: Box) -> tuple | None:
    """A common point of three pairwise-intersecting boxes, else None."""
    _same_dim(x, y, z)
    if not (boxes_intersect(x, y) and boxes_intersect(y, z) and boxes_intersect(x, z)):
        return None
    return tuple(max(p.lo, q.lo, r.lo) for p, q, r in zip(x, y, z))


def canonical_rank(rep: BoxRepresentation) -> BoxRepresentation:
    """Compress coordinates per axis to dense ranks, keeping every comparison."""
    axes = []
    for i in range(rep.d):
        values = sorted({t for b in rep.boxes for t in b[i]})
        axes.append({t: r for r, t in enumerate(values)})
    return BoxRepresentation(rep.d, tuple(
        tuple(Interval(axes[i][iv.lo], axes[i][iv.hi]) for i, iv in enumerate(b)) for b in rep.boxes))
