"""Clause collection with named variables and Tseitin compilation.

Formulas are nested tuples over DIMACS literals::

    f ::= int | ("and", f, ...) | ("or", f, ...) | ("not", f)

``CNF.require(f)`` adds clauses forcing ``f``.  Sub-formulas get one-sided
(positive polarity) definitions, which is enough because nothing is ever
required to be false except through ``not``, and negations are pushed to the
literals first.
"""

from __future__ import annotations

TRUE = ("and",)
FALSE = ("or",)


def AND(*fs):
    return ("and",) + fs


def OR(*fs):
    return ("or",) + fs


def NOT(f):
    return ("not", f)


def nnf(f, neg=False):
    if isinstance(f, int):
        return -f if neg else f
    op = f[0]
    if op == "not":
        return nnf(f[1], not neg)
    kids = [nnf(g, neg) for g in f[1:]]
    if neg:
        op = "or" if op == "and" else "and"
    flat = []
    for g in kids:
        if not isinstance(g, int) and g[0] == op:
            flat.extend(g[1:])
        else:
            flat.append(g)
    return (op,) + tuple(flat)


def evaluate(f, value) -> bool:
    """Truth of ``f`` under ``value(lit) -> bool``."""
    if isinstance(f, int):
        return value(f)
    op = f[0]
    if op == "not":
        return not evaluate(f[1], value)
    if op == "and":
        return all(evaluate(g, value) for g in f[1:])
    return any(evaluate(g, value) for g in f[1:])


class CNF:
    def __init__(self):
        self.nvars = 0
        self.clauses: list[list[int]] = []
        self.names: dict[int, tuple] = {}
        self._sink = None

    def new_var(self, name: tuple | None = None) -> int:
        self.nvars += 1
        if name is not None:
            self.names[self.nvars] = name
        return self.nvars

    def add(self, clause: list) -> None:
        if self._sink is not None:
            self._sink(clause)
        else:
            self.clauses.append(clause)

    def require(self, f) -> None:
        f = nnf(f)
        if isinstance(f, int):
            self.add([f])
        elif f[0] == "and":
            for g in f[1:]:
                self.require(g)
        else:
            self.add([self._lit(g) for g in f[1:]])

    def _lit(self, f) -> int:
        if isinstance(f, int):
            return f
        x = self.new_var(("aux",))
        if f[0] == "and":
            for g in f[1:]:
                self.add([-x, self._lit(g)])
        else:
            self.add([-x] + [self._lit(g) for g in f[1:]])
        return x

    def to_dimacs(self, comments=()) -> str:
        out = [f"c {line}" for line in comments]
        for v in sorted(self.names):
            name = self.names[v]
            if name[0] != "aux":
                out.append("c map " + str(v) + " " + " ".join(str(t) for t in name))
        out.append(f"p cnf {self.nvars} {len(self.clauses)}")
        out.extend(" ".join(map(str, c)) + " 0" for c in self.clauses)
        return "\n".join(out) + "\n"
