"""Exhaustive oracle for tiny graphs, independent of the SAT encodings.

One axis of a representation is swept left to right as a sequence of events
"open w" / "close v".  Touching endpoints count as overlap for closed
intervals, so sequences without ties already produce every interval graph.
Every axis must keep the graph's edges (a vertex cannot open once one of its
neighbours has closed, and cannot close before all neighbours opened); what
varies is which non-edges an axis separates.  We enumerate, with
memoisation on the (opened, closed) state, the inclusion-maximal sets of
separated non-edges and then look for ``d`` of them covering all non-edges.
"""

from __future__ import annotations

from functools import lru_cache

from ..geometry import BoxRepresentation, Interval

MAX_N = 7


def _pairbit(n):
    bit = {}
    k = 0
    for u in range(n):
        for v in range(u + 1, n):
            bit[u, v] = bit[v, u] = 1 << k
            k += 1
    return bit


def _maximal(items: dict) -> dict:
    """Keep masks not strictly contained in another mask."""
    masks = sorted(items, key=lambda m: -bin(m).count("1"))
    kept: list[int] = []
    for m in masks:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return {m: items[m] for m in kept}


def separation_profiles(g) -> dict[int, tuple]:
    """Maximal separable non-edge masks of one axis, each with an event sequence."""
    n = g.n
    bit = _pairbit(n)
    nbr = [sum(1 << w for w in g.neighbors(v)) for v in range(n)]
    sep_with = [[0] * (1 << n) for _ in range(n)]
    for w in range(n):
        for closed in range(1 << n):
            m = 0
            for u in range(n):
                if u != w and closed >> u & 1:
                    m |= bit[u, w]
            sep_with[w][closed] = m
    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def F(opened: int, closed: int):
        if closed == full:
            return {0: ()}
        out: dict[int, tuple] = {}
        for w in range(n):
            bw = 1 << w
            if not opened & bw and not nbr[w] & closed:
                add = sep_with[w][closed]
                for m, seq in F(opened | bw, closed).items():
                    mm = m | add
                    if mm not in out:
                        out[mm] = (("open", w),) + seq
            elif opened & bw and not closed & bw and nbr[w] & opened == nbr[w]:
                for m, seq in F(opened, closed | bw).items():
                    if m not in out:
                        out[m] = (("close", w),) + seq
        return _maximal(out)

    return F(0, 0)


def _intervals(seq, n):
    lo, hi = [0] * n, [0] * n
    for t, (kind, v) in enumerate(seq):
        (lo if kind == "open" else hi)[v] = t
    return [Interval(lo[v], hi[v]) for v in range(n)]


def brute_decide(g, d: int) -> BoxRepresentation | None:
    """A d-box representation of ``g``, or None if none exists."""
    if g.n > MAX_N:
        raise ValueError(f"brute engine is limited to n <= {MAX_N}")
    if d < 1:
        raise ValueError("d must be at least 1")
    n = g.n
    if n == 0:
        return BoxRepresentation(d, ())
    bit = _pairbit(n)
    need = 0
    for u, v in g.non_edges():
        need |= bit[u, v]
    profiles = separation_profiles(g)
    masks = list(profiles)

    def cover(rest: int, k: int, start: int, chosen: list):
        if rest == 0:
            return chosen
        if k == 0:
            return None
        for idx in range(start, len(masks)):
            m = masks[idx]
            if m & rest:
                r = cover(rest & ~m, k - 1, idx, chosen + [m])
                if r is not None:
                    return r
        return None

    chosen = cover(need, d, 0, [])
    if chosen is None:
        return None
    while len(chosen) < d:
        chosen.append(chosen[0] if chosen else masks[0])
    axes = [_intervals(profiles[m], n) for m in chosen]
    return BoxRepresentation(d, tuple(tuple(ax[v] for ax in axes) for v in range(n)))
