"""Simple undirected graphs, construction primitives and class recognition.

Graphs are immutable values.  Construction operations (``split_edge``,
``add_pendant``, ``series_subdivide``) return a new graph together with the
index of the vertex they created; new vertices always take index ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping


class GraphError(ValueError):
    """Invalid graph or invalid graph operation."""


class GraphFormatError(GraphError):
    """Malformed graph text.  ``code`` identifies the failure."""

    def __init__(self, code: str, message: str, line: int | None = None):
        self.code = code
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{code}: {message}{where}")


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = frozenset()
    labels: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        edges = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={self.n}")
            edges.add(_norm(u, v))
        object.__setattr__(self, "edges", frozenset(edges))
        labels = dict(self.labels)
        seen = {}
        for name, idx in labels.items():
            if not 0 <= idx < self.n:
                raise GraphError(f"label {name!r} -> {idx} out of range")
            if idx in seen:
                raise GraphError(f"labels {seen[idx]!r} and {name!r} share vertex {idx}")
            seen[idx] = name
        object.__setattr__(self, "labels", labels)
        adj = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    def __hash__(self):
        return hash((self.n, self.edges, tuple(sorted(self.labels.items()))))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n, self.edges, self.labels) == (other.n, other.edges, other.labels)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable, labels: Mapping[str, int] | None = None) -> "Graph":
        return cls(n, frozenset(_norm(*e) for e in edges), labels or {})

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and v in self._adj[u]

    def vertex(self, label: str) -> int:
        try:
            return self.labels[label]
        except KeyError:
            raise GraphError(f"graph has no vertex labelled {label!r}") from None

    def name_of(self, v: int) -> str:
        for name, idx in self.labels.items():
            if idx == v:
                return name
        return str(v)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def non_edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if v not in self._adj[u]]

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph on ``vertices`` (relabelled in the given order).

        Returns the subgraph and the map old index -> new index.  Labels of
        kept vertices are carried over.
        """
        order = list(dict.fromkeys(vertices))
        index = {v: i for i, v in enumerate(order)}
        edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        labels = {k: index[v] for k, v in self.labels.items() if v in index}
        return Graph.from_edges(len(order), edges, labels), index

    def with_labels(self, labels: Mapping[str, int]) -> "Graph":
        return Graph(self.n, self.edges, dict(labels))

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self._adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


# construction primitives ---------------------------------------------------

def _with_new_vertex(g: Graph, new_edges, drop=None) -> tuple[Graph, int]:
    w = g.n
    edges = set(g.edges)
    if drop is not None:
        edges.discard(_norm(*drop))
    edges.update(_norm(u, w) for u in new_edges)
    return Graph(g.n + 1, frozenset(edges), g.labels), w


def split_edge(g: Graph, u: int, v: int) -> tuple[Graph, int]:
    """Add a vertex adjacent to both ends of the edge (u, v); the edge stays."""
    if u == v or not g.has_edge(u, v):
        raise GraphError(f"cannot split ({u}, {v}): not an edge")
    return _with_new_vertex(g, (u, v))


def add_pendant(g: Graph, u: int) -> tuple[Graph, int]:
    if not 0 <= u < g.n:
        raise GraphError(f"vertex {u} out of range for n={g.n}")
    return _with_new_vertex(g, (u,))


def series_subdivide(g: Graph, u: int, v: int) -> tuple[Graph, int]:
    """Replace the edge (u, v) by a path u - y - v through a new vertex y."""
    if u == v or not g.has_edge(u, v):
        raise GraphError(f"cannot subdivide ({u}, {v}): not an edge")
    return _with_new_vertex(g, (u, v), drop=(u, v))


# recognition ---------------------------------------------------------------

def _reduces_to_edge(adj: dict[int, set]) -> bool:
    # adj is mutated; it is one connected component
    queue = [v for v, nb in adj.items() if len(nb) <= 2]
    while queue and len(adj) > 2:
        v = queue.pop()
        if v not in adj:
            continue
        nb = adj[v]
        if len(nb) == 1:
            (u,) = nb
            adj[u].discard(v)
            del adj[v]
            if len(adj[u]) <= 2:
                queue.append(u)
        elif len(nb) == 2:
            u, w = nb
            adj[u].discard(v)
            adj[w].discard(v)
            del adj[v]
            # parallel edges collapse into the existing one
            adj[u].add(w)
            adj[w].add(u)
            for x in (u, w):
                if len(adj[x]) <= 2:
                    queue.append(x)
    return len(adj) <= 2


def is_series_parallel(g: Graph) -> bool:
    """True iff every component of ``g`` has no K4 minor.

    Degree-1 vertices are deleted and degree-2 vertices suppressed until
    nothing changes; a component is series-parallel iff it reduces to a
    single vertex or edge.
    """
    for comp in g.components():
        adj = {v: set(g.neighbors(v)) for v in comp}
        if not _reduces_to_edge(adj):
            return False
    return True


def is_2_tree(g: Graph) -> bool:
    """True iff ``g`` reduces to a triangle by peeling simplicial degree-2 vertices."""
    if g.n < 3 or g.m != 2 * g.n - 3:
        return False
    adj = {v: set(g.neighbors(v)) for v in range(g.n)}

    def simplicial2(v):
        nb = adj[v]
        if len(nb) != 2:
            return False
        u, w = nb
        return w in adj[u]

    queue = [v for v in adj if simplicial2(v)]
    while queue and len(adj) > 3:
        v = queue.pop()
        if v not in adj or not simplicial2(v):
            continue
        u, w = adj.pop(v)
        adj[u].discard(v)
        adj[w].discard(v)
        queue.extend(x for x in (u, w) if simplicial2(x))
    if len(adj) != 3:
        return False
    return all(len(nb) == 2 for nb in adj.values())


# text format ---------------------------------------------------------------

def serialize_graph(g: Graph) -> str:
    lines = []
    for name, idx in sorted(g.labels.items(), key=lambda kv: (kv[1], kv[0])):
        lines.append(f"# label {name} {idx}")
    lines.append(f"{g.n} {g.m}")
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    labels: dict[str, int] = {}
    header = None
    edges: list[tuple[int, int]] = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            parts = line[1:].split()
            if parts and parts[0] == "label":
                if len(parts) != 3:
                    raise GraphFormatError("bad-label", f"malformed label comment {raw!r}", lineno)
                try:
                    labels[parts[1]] = int(parts[2])
                except ValueError:
                    raise GraphFormatError("bad-label", f"non-integer label index {raw!r}", lineno) from None
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            code = "bad-header" if header is None else "bad-edge"
            raise GraphFormatError(code, f"non-integer token in {raw!r}", lineno) from None
        if len(nums) != 2:
            code = "bad-header" if header is None else "bad-edge"
            raise GraphFormatError(code, f"expected two integers, got {raw!r}", lineno)
        if header is None:
            if nums[0] < 0 or nums[1] < 0:
                raise GraphFormatError("bad-header", "negative count", lineno)
            header = nums
            continue
        u, v = nums
        n = header[0]
        if u == v:
            raise GraphFormatError("self-loop", f"self-loop at {u}", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphFormatError("out-of-range", f"edge ({u}, {v}) outside [0, {n})", lineno)
        e = _norm(u, v)
        if e in seen:
            raise GraphFormatError("duplicate-edge", f"duplicate edge {e}", lineno)
        seen.add(e)
        edges.append(e)
    if header is None:
        raise GraphFormatError("bad-header", "missing 'n m' header")
    n, m = header
    if m != len(edges):
        raise GraphFormatError("edge-count", f"header says {m} edges, found {len(edges)}")
    for name, idx in labels.items():
        if not 0 <= idx < n:
            raise GraphFormatError("bad-label", f"label {name!r} -> {idx} out of range")
    try:
        return Graph.from_edges(n, edges, labels)
    except GraphError as exc:
        raise GraphFormatError("bad-label", str(exc)) from None
