"""Interval-order encoding with lazily generated 2+2 axioms.

Atom ``before(i, u, v)`` means the axis-i interval of u ends strictly before
that of v starts.  Adjacent pairs can never be ordered, so their atoms are
constant false and never allocated.  A relation is realisable by intervals
exactly when it is an interval order; the axioms

    before(u, v) & before(x, y)  ->  before(u, y) | before(x, v)

(with before(w, w) false) imply irreflexivity-compatible transitivity and
asymmetry as special cases.  They are quartic in n, so the CEGAR loop only
adds the ones a candidate model violates.
"""

from __future__ import annotations

import numpy as np

from ..geometry import Interval
from .cnf import CNF
from .orders import EndpointOrder


class BeforeEncoding:
    def __init__(self, g, d: int, cnf: CNF | None = None):
        self.g = g
        self.d = d
        self.cnf = cnf if cnf is not None else CNF()
        self.var: dict[tuple, int] = {}
        n = g.n
        for i in range(1, d + 1):
            for u in range(n):
                for v in range(n):
                    if u != v and not g.has_edge(u, v):
                        self.var[i, u, v] = self.cnf.new_var(("before", u, v, "dim", i))
        for i in range(1, d + 1):
            for u, v in g.non_edges():
                self.cnf.add([-self.var[i, u, v], -self.var[i, v, u]])
        for u, v in g.non_edges():
            lits = []
            for i in range(1, d + 1):
                lits += [self.var[i, u, v], self.var[i, v, u]]
            self.cnf.add(lits)
        self.added: set[tuple] = set()

    def b(self, i, u, v) -> int | None:
        return self.var.get((i, u, v))

    def axiom(self, i, u, v, x, y) -> list[int] | None:
        """Clause for the 2+2 axiom on (u<v, x<y), or None when vacuous."""
        if (u, v) == (x, y):
            return None
        p, q = self.b(i, u, v), self.b(i, x, y)
        if p is None or q is None:
            return None
        clause = [-p, -q]
        for lit in (self.b(i, u, y), self.b(i, x, v)):
            if lit is not None and lit not in clause:
                if -lit in clause:
                    return None
                clause.append(lit)
        return clause

    def count_axioms(self) -> int:
        """Number of non-vacuous axiom clauses (up to the (u,v)<->(x,y) swap)."""
        total = 0
        for i in range(1, self.d + 1):
            pairs = [k[1:] for k in self.var if k[0] == i]
            for a in range(len(pairs)):
                for b in range(a + 1, len(pairs)):
                    if self.axiom(i, *pairs[a], *pairs[b]) is not None:
                        total += 1
        return total

    def all_axioms(self):
        for i in range(1, self.d + 1):
            pairs = [k[1:] for k in self.var if k[0] == i]
            for a in range(len(pairs)):
                for b in range(a + 1, len(pairs)):
                    c = self.axiom(i, *pairs[a], *pairs[b])
                    if c is not None:
                        yield c

    def relation(self, value, i: int) -> np.ndarray:
        n = self.g.n
        B = np.zeros((n, n), dtype=bool)
        for (j, u, v), x in self.var.items():
            if j == i and value(x):
                B[u, v] = True
        return B

    def violations(self, value, limit: int = 5000) -> list[list[int]]:
        """Axiom clauses falsified by the model, at most one per vertex pair."""
        out = []
        for i in range(1, self.d + 1):
            B = self.relation(value, i)
            Bi = B.astype(np.int32)
            # D[u, x] = |succ(x) - succ(u)|
            D = (1 - Bi) @ Bi.T
            bad = np.argwhere((D > 0) & (D.T > 0))
            for u, x in bad:
                if u >= x:
                    continue
                y = int(np.flatnonzero(~B[u] & B[x])[0])
                v = int(np.flatnonzero(B[u] & ~B[x])[0])
                key = (i, int(u), v, int(x), y)
                c = self.axiom(*key)
                if c is None:  # pragma: no cover - a violated axiom is never vacuous
                    raise AssertionError(f"violated axiom {key} is vacuous")
                out.append(c)
                if len(out) >= limit:
                    return out
        return out

    def orders(self, value) -> list[EndpointOrder]:
        """Endpoint orders realising each axis' interval order."""
        return [order_from_relation(self.relation(value, i)) for i in range(1, self.d + 1)]


def order_from_relation(B: np.ndarray) -> EndpointOrder:
    """Intervals with R(u) < L(v) exactly when ``B[u, v]``.

    Left ends sit at twice the number of predecessors; a right end sits just
    before the leftmost left end of its successors.  Raises ValueError when
    ``B`` is not an interval order.
    """
    n = len(B)
    pred = B.sum(axis=0)
    ivs = []
    for v in range(n):
        succ = np.flatnonzero(B[v])
        lo = 2 * int(pred[v])
        hi = 2 * int(pred[succ].min()) - 1 if len(succ) else 2 * n
        if hi < lo:
            raise ValueError(f"vertex {v} precedes a vertex with fewer predecessors")
        ivs.append(Interval(lo, hi))
    order = EndpointOrder.from_intervals(ivs)
    for u in range(n):
        for w in range(n):
            if u != w and bool(B[u, w]) != (order.rank[2 * u + 1] < order.rank[2 * w]):
                raise ValueError(f"relation is not an interval order (pair {u}, {w})")
    if n and B.diagonal().any():
        raise ValueError("relation is not irreflexive")
    return order
