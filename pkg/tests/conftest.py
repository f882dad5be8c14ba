import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from boxkit import Graph, Interval, BoxRepresentation  # noqa: E402

# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_rep(rng: random.Random, n: int, d: int, hi: int = 6) -> BoxRepresentation:
    boxes = []
    for _ in range(n):
        box = []
        for _ in range(d):
            lo = rng.randint(0, hi)
            box.append(Interval(lo, rng.randint(lo, hi)))
        boxes.append(tuple(box))
    return BoxRepresentation(d, tuple(boxes))


def graph_of(rep: BoxRepresentation) -> Graph:
    """Intersection graph of a representation, computed directly."""
    n = rep.n
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                                if all(p.lo <= q.hi and q.lo <= p.hi
                                       for p, q in zip(rep[u], rep[v]))])


@pytest.fixture
def rng():
    return random.Random(12345)
