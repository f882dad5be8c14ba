"""Builders for the gadget graphs L1..L4 and the 2-tree G.

All gadgets start from a single edge (a, b) and grow by edge splits (L1 also
takes one pendant).  The fan width ``k`` defaults to 5: with ``k >= 5`` a fan
has more vertices than a rectangle has corner points, which is what the
lemmas rely on.

Vertex labels: ``a``, ``b``, ``c1..ck``; L2 uses ``c``, ``x``, ``y``; L1 uses
``c`` and ``z``; L3/L4 use ``x{i}``, ``y{i}`` (and ``z{i}``); G uses
``d{i}_{j}``, ``e{i}_{j}``, ``p{i}_{j}``, ``q{i}_{j}``, ``r{i}_{j}``,
``s{i}_{j}``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError, add_pendant, split_edge

GADGETS = ("L1", "L2", "L3", "L4", "G")


@dataclass(frozen=True)
class GadgetSpec:
    name: str
    k: int = 5

    def __post_init__(self):
        if self.name not in GADGETS:
            raise GraphError(f"unknown gadget {self.name!r}; expected one of {', '.join(GADGETS)}")
        if self.k < 1:
            raise GraphError("fan width k must be at least 1")


class _Builder:
    def __init__(self):
        self.g = Graph.from_edges(2, [(0, 1)])
        self.labels = {"a": 0, "b": 1}

    def split(self, u: str, v: str, name: str) -> None:
        self.g, w = split_edge(self.g, self.labels[u], self.labels[v])
        self.labels[name] = w

    def pendant(self, u: str, name: str) -> None:
        self.g, w = add_pendant(self.g, self.labels[u])
        self.labels[name] = w

    def graph(self) -> Graph:
        return self.g.with_labels(self.labels)


def _fan(bld: _Builder, k: int) -> None:
    for i in range(1, k + 1):
        bld.split("a", "b", f"c{i}")


def build_gadget(spec: GadgetSpec | str, k: int | None = None) -> Graph:
    if isinstance(spec, str):
        spec = GadgetSpec(spec, 5 if k is None else k)
    k = spec.k
    bld = _Builder()
    if spec.name == "L1":
        bld.split("a", "b", "c")
        bld.pendant("c", "z")
    elif spec.name == "L2":
        bld.split("a", "b", "c")
        bld.split("a", "c", "x")
        bld.split("b", "c", "y")
    elif spec.name in ("L3", "L4"):
        _fan(bld, k)
        for i in range(1, k + 1):
            bld.split("a", f"c{i}", f"x{i}")
            bld.split("b", f"c{i}", f"y{i}")
        if spec.name == "L4":
            for i in range(1, k + 1):
                bld.split(f"x{i}", f"c{i}", f"z{i}")
    else:
        _fan(bld, k)
        for i in range(1, k + 1):
            for j in range(1, k + 1):
                bld.split("a", f"c{i}", f"d{i}_{j}")
            for j in range(1, k + 1):
                bld.split("b", f"c{i}", f"e{i}_{j}")
        for i in range(1, k + 1):
            for j in range(1, k + 1):
                bld.split("a", f"d{i}_{j}", f"p{i}_{j}")
                bld.split(f"c{i}", f"d{i}_{j}", f"q{i}_{j}")
                bld.split("b", f"e{i}_{j}", f"r{i}_{j}")
                bld.split(f"c{i}", f"e{i}_{j}", f"s{i}_{j}")
    return bld.graph()


def gadget_label_map(which: str, k: int, i: int | None = None, side: str = "a") -> dict[str, str]:
    """Label correspondence from a gadget inside G to the labels of G.

    ``which="L4"`` maps the L4(k) labels onto G's; ``which="L3"`` maps the
    L3(k) labels onto the fan hanging off edge (a, c_i) (``side="a"``) or
    (b, c_i) (``side="b"``).
    """
    if which == "L4":
        out = {"a": "a", "b": "b"}
        for t in range(1, k + 1):
            out.update({f"c{t}": f"c{t}", f"x{t}": f"d{t}_1", f"y{t}": f"e{t}_1", f"z{t}": f"q{t}_1"})
        return out
    if which == "L3":
        if i is None or not 1 <= i <= k:
            raise GraphError(f"fan index {i} outside [1, {k}]")
        if side not in ("a", "b"):
            raise GraphError(f"side must be 'a' or 'b', got {side!r}")
        mid, ear1, ear2 = ("d", "p", "q") if side == "a" else ("e", "r", "s")
        # in L3 the apex pair is (a, b); here it is (side, c_i)
        out = {"a": side, "b": f"c{i}"}
        for j in range(1, k + 1):
            out.update({f"c{j}": f"{mid}{i}_{j}", f"x{j}": f"{ear1}{i}_{j}", f"y{j}": f"{ear2}{i}_{j}"})
        return out
    raise GraphError(f"no embedding of {which!r} into G")


def embedded_subgadget(g: Graph, which: str, k: int | None = None, i: int | None = None,
                       side: str = "a") -> tuple[list[int], dict[str, str]]:
    """Vertex subset of G inducing a copy of L4 or of L3 at fan (i, side).

    Returns the subset (ordered as the gadget's own vertex indices) and the
    label bijection used.  Raises if G lacks a required label or if the
    induced subgraph is not isomorphic to the gadget under that bijection.
    """
    if k is None:
        k = sum(1 for name in g.labels if name.startswith("c") and name[1:].isdigit())
    lmap = gadget_label_map(which, k, i, side)
    target = build_gadget(GadgetSpec(which, k))
    inverse = {v: name for name, v in target.labels.items()}
    subset = [g.vertex(lmap[inverse[v]]) for v in range(target.n)]
    sub, _ = g.induced(subset)
    if sub.edges != target.edges:
        missing = target.edges - sub.edges
        extra = sub.edges - target.edges
        raise GraphError(f"{which} embedding broken: missing {sorted(missing)}, extra {sorted(extra)}")
    return subset, lmap
