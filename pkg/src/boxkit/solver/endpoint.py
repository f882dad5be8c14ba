"""Endpoint-order encoding: one Boolean atom per ordered token pair and axis.

``le(i, e, f)`` means token e is at or before token f on axis i.  Per axis the
atoms form a total preorder (totality + transitivity); left endpoints never
come after right endpoints; edges overlap on every axis and non-edges are
disjoint on some axis.  Ties are allowed, so closed intervals are modelled
exactly and every concrete representation is a model.
"""

from __future__ import annotations

from .cnf import CNF
from .orders import EndpointOrder, L, R, realize


def token_name(t: int) -> str:
    return ("L" if t % 2 == 0 else "R") + str(t // 2)


def parse_token(s: str) -> int:
    if not s or s[0] not in "LR":
        raise ValueError(f"bad endpoint token {s!r}")
    return 2 * int(s[1:]) + (s[0] == "R")


class EndpointEncoding:
    def __init__(self, g, d: int, constraints=(), cnf: CNF | None = None):
        self.g = g
        self.d = d
        self.constraints = list(constraints)
        self.T = 2 * g.n
        self.cnf = cnf if cnf is not None else CNF()
        self._base = self.cnf.nvars
        T = self.T
        # allocate le(i, e, f) for e != f densely; diagonal slots unused
        for i in range(1, d + 1):
            for e in range(T):
                for f in range(T):
                    if e != f:
                        self.cnf.new_var(("le", token_name(e), token_name(f), "dim", i))
        self._build()

    def le(self, i: int, e: int, f: int) -> int:
        T = self.T
        if e == f:
            raise ValueError("le on identical tokens")
        # dense index skipping the diagonal
        k = e * (T - 1) + (f if f < e else f - 1)
        return self._base + (i - 1) * T * (T - 1) + k + 1

    def _build(self) -> None:
        cnf, T, g = self.cnf, self.T, self.g
        le = self.le
        add = cnf.add
        for i in range(1, self.d + 1):
            idx = [[le(i, e, f) if e != f else 0 for f in range(T)] for e in range(T)]
            for e in range(T):
                row = idx[e]
                for f in range(e + 1, T):
                    add([row[f], idx[f][e]])
            for e in range(T):
                row = idx[e]
                for f in range(T):
                    if f == e:
                        continue
                    ef = -row[f]
                    rowf = idx[f]
                    for h in range(T):
                        if h != e and h != f:
                            add([ef, -rowf[h], row[h]])
            for v in range(g.n):
                add([idx[L(v)][R(v)]])
            for u, v in g.edges:
                add([idx[L(u)][R(v)]])
                add([idx[L(v)][R(u)]])
        for u, v in g.non_edges():
            # disjoint on some axis: R(u) < L(v) or R(v) < L(u)
            cnf.add([-le(i, L(v), R(u)) for i in range(1, self.d + 1)]
                    + [-le(i, L(u), R(v)) for i in range(1, self.d + 1)])
        for con in self.constraints:
            con.check_applicable(g.n, self.d)
            cnf.require(con.formula(self, self.d))

    def decode(self, value) -> list[EndpointOrder]:
        """Endpoint orders from ``value(var) -> bool``."""
        return [EndpointOrder.from_relation(lambda e, f, i=i: value(self.le(i, e, f)), self.T)
                for i in range(1, self.d + 1)]

    def representation(self, value):
        return realize(self.decode(value), self.g.n)

    def fix_orders(self, orders) -> None:
        """Pin every atom to the comparisons of the given orders."""
        for i, o in enumerate(orders, 1):
            for e in range(self.T):
                for f in range(self.T):
                    if e != f:
                        x = self.le(i, e, f)
                        self.cnf.add([x if o.le(e, f) else -x])
