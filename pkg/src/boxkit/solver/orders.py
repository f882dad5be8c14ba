"""Endpoint orders: the combinatorial shadow of one axis of a representation.

Token ``2*v`` is the left endpoint of vertex ``v`` and ``2*v + 1`` its right
endpoint.  An order is stored as dense ranks (ties share a rank), so
``rank[e] <= rank[f]`` is the atom "e <= f".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from ..geometry import BoxRepresentation, Interval


class OrderError(ValueError):
    pass


def L(v: int) -> int:
    return 2 * v


def R(v: int) -> int:
    return 2 * v + 1


@dataclass(frozen=True)
class EndpointOrder:
    rank: tuple

    def __post_init__(self):
        rank = tuple(self.rank)
        if len(rank) % 2:
            raise OrderError("need an even number of endpoint tokens")
        for v in range(len(rank) // 2):
            if rank[2 * v] > rank[2 * v + 1]:
                raise OrderError(f"vertex {v}: left endpoint ranked after right endpoint")
        object.__setattr__(self, "rank", rank)

    @property
    def n(self) -> int:
        return len(self.rank) // 2

    def le(self, e: int, f: int) -> bool:
        return self.rank[e] <= self.rank[f]

    @classmethod
    def from_relation(cls, le: Callable[[int, int], bool], ntokens: int) -> "EndpointOrder":
        """Build from a "<=" oracle, checking that it is a total preorder."""
        # rank = number of tokens strictly below
        below = [sum(1 for f in range(ntokens) if f != e and not le(e, f)) for e in range(ntokens)]
        dense = {r: i for i, r in enumerate(sorted(set(below)))}
        rank = tuple(dense[b] for b in below)
        for e in range(ntokens):
            for f in range(ntokens):
                if e != f and le(e, f) != (rank[e] <= rank[f]):
                    raise OrderError(f"relation is not a total preorder at tokens {e}, {f}")
        return cls(rank)

    @classmethod
    def from_intervals(cls, intervals: Sequence[Interval]) -> "EndpointOrder":
        coords = [t for iv in intervals for t in (iv.lo, iv.hi)]
        dense = {c: i for i, c in enumerate(sorted(set(coords)))}
        return cls(tuple(dense[c] for c in coords))


def orders_of(rep: BoxRepresentation) -> list[EndpointOrder]:
    return [EndpointOrder.from_intervals([b[i] for b in rep.boxes]) for i in range(rep.d)]


def realize(orders: Sequence[EndpointOrder], n: int | None = None) -> BoxRepresentation:
    """Integer boxes whose endpoint comparisons are exactly those of ``orders``."""
    if not orders:
        raise OrderError("need at least one dimension")
    n = orders[0].n if n is None else n
    for o in orders:
        if o.n != n:
            raise OrderError(f"order covers {o.n} vertices, expected {n}")
    boxes = tuple(tuple(Interval(o.rank[2 * v], o.rank[2 * v + 1]) for o in orders) for v in range(n))
    rep = BoxRepresentation(len(orders), boxes)
    for i, o in enumerate(orders):
        coords = [t for b in rep.boxes for t in (b[i].lo, b[i].hi)]
        if any((coords[e] <= coords[f]) != o.le(e, f) for e in range(2 * n) for f in range(2 * n)):
            raise OrderError("realisation does not reproduce the endpoint order")  # pragma: no cover
        if max(coords, default=0) >= max(2 * n, 1):
            raise OrderError("realised coordinate outside [0, 2n)")  # pragma: no cover
    return rep
