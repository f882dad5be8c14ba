"""Machine checks for the rectangle-representation lemmas and the theorem.

Lemmas about representations of a fixed gadget are checked by asking the
solver for a representation that violates the conclusion; the lemma holds
iff that search is refuted.  The two lemmas that quantify over all boxes
(Helly, projection) are checked by random sampling against grid oracles.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

import numpy as np

from . import geometry as geo
from .gadgets import GadgetSpec, build_gadget, embedded_subgadget
from .solver import (Budget, ForbidCornerMembership, ForbidCrossing, ForbidProjectionInCap,
                     RequireBoxInUnion, RequireCrossing, RequireIntersectionContained,
                     decide_box_le)
from .solver.constraints import describe

LEMMAS = ("pendant", "helly", "difference", "projection", "corner", "cross", "main")


@dataclass
class Verdict:
    lemma: str
    status: str                      # "verified" | "refuted" | "undecided"
    counterexample: object = None
    queries: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return self.status == "verified"

    def to_json(self) -> dict:
        ce = self.counterexample
        if isinstance(ce, geo.BoxRepresentation):
            ce = [[list(iv) for iv in b] for b in ce.boxes]
        elif ce is not None:
            ce = [[list(iv) for iv in b] for b in ce]
        return {"lemma": self.lemma, "verdict": self.status, "queries": self.queries,
                "stats": self.stats, "counterexample": ce}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


# queries ------------------------------------------------------------------

def lemma_queries(lemma: str, k: int = 5) -> list[tuple]:
    """(gadget graph, constraints) pairs whose joint refutation proves ``lemma``."""
    if lemma == "pendant":
        g = build_gadget(GadgetSpec("L1"))
        a, b, c = (g.vertex(x) for x in "abc")
        return [(g, [RequireBoxInUnion(c, a, b)])]
    if lemma == "difference":
        g = build_gadget(GadgetSpec("L2"))
        a, b, c = (g.vertex(x) for x in "abc")
        return [(g, [RequireIntersectionContained(c, a, b)]),
                (g, [RequireIntersectionContained(c, b, a)])]
    if lemma == "corner":
        g = build_gadget(GadgetSpec("L2"))
        a, b, c = (g.vertex(x) for x in "abc")
        # hypothesis on both axes, conclusion negated
        return [(g, [ForbidProjectionInCap(1, c, a, b), ForbidProjectionInCap(2, c, a, b),
                     ForbidCornerMembership(c, a, b)])]
    if lemma == "cross":
        g = build_gadget(GadgetSpec("L3", k))
        return [(g, [RequireCrossing(g.vertex("a"), g.vertex("b"))])]
    if lemma == "main":
        g = build_gadget(GadgetSpec("L4", k))
        a, b = g.vertex("a"), g.vertex("b")
        cons = []
        for i in range(1, k + 1):
            c = g.vertex(f"c{i}")
            cons += [ForbidCrossing(a, c), ForbidCrossing(b, c)]
        return [(g, cons)]
    raise ValueError(f"lemma {lemma!r} is not checked by solver queries")


def _solver_lemma(lemma, budget, engine, k, seed) -> Verdict:
    budget = budget or Budget()
    t0 = time.monotonic()
    queries = []
    undecided = False
    for g, cons in lemma_queries(lemma, k):
        left = budget
        if budget.seconds is not None:
            remaining = budget.seconds - (time.monotonic() - t0)
            if remaining <= 0:
                undecided = True
                queries.append({"constraints": [describe(c, g) for c in cons], "outcome": "skipped"})
                continue
            left = Budget(remaining, budget.conflicts, budget.memory_mb)
        out = decide_box_le(g, 2, cons, engine=engine, budget=left, seed=seed)
        queries.append({"gadget_n": g.n, "gadget_m": g.m, "d": 2, "engine": engine,
                        "constraints": [describe(c, g) for c in cons],
                        "outcome": out.status.value, "stats": out.stats})
        if out.feasible:
            rep = out.representation
            # independent re-check before calling the lemma refuted
            if geo.verify_representation(g, rep) is not None or not all(c.holds(rep) for c in cons):
                raise AssertionError(f"{lemma}: solver returned an invalid counterexample")
            return Verdict(lemma, "refuted", rep, queries, {"seconds": time.monotonic() - t0})
        if out.exhausted:
            undecided = True
    status = "undecided" if undecided else "verified"
    return Verdict(lemma, status, None, queries, {"seconds": time.monotonic() - t0})


# sampled geometric identities ----------------------------------------------

GRID_MAX = 8
_GRID = np.arange(0, 2 * GRID_MAX + 1) / 2.0   # integers and half-integers in [0, 8]


def random_boxes(rng: np.random.Generator, count: int, k: int = 3, d: int = 2, hi: int = GRID_MAX):
    """Array (count, k, d, 2) of random integer boxes in [0, hi]^d."""
    ends = rng.integers(0, hi + 1, size=(count, k, d, 2))
    ends.sort(axis=-1)
    return ends


def _membership(boxes: np.ndarray) -> np.ndarray:
    """(N, 17, 17) grid membership for (N, 2, 2) boxes."""
    g = _GRID
    inx = (boxes[:, 0, 0, None] <= g) & (g <= boxes[:, 0, 1, None])
    iny = (boxes[:, 1, 0, None] <= g) & (g <= boxes[:, 1, 1, None])
    return inx[:, :, None] & iny[:, None, :]


def grid_diff_hits(c, a, b) -> np.ndarray:
    """Vectorised oracle: some grid point in c & a but not in b."""
    mc, ma, mb = _membership(c), _membership(a), _membership(b)
    return (mc & ma & ~mb).any(axis=(1, 2))


def grid_in_union(c, a, b) -> np.ndarray:
    mc, ma, mb = _membership(c), _membership(a), _membership(b)
    return ~(mc & ~(ma | mb)).any(axis=(1, 2))


def grid_axis_diff(c, a, b, i) -> np.ndarray:
    """Some grid point of the axis-i interval of c lies in that of a but not b."""
    g = _GRID

    def m(x):
        return (x[:, i, 0, None] <= g) & (g <= x[:, i, 1, None])
    return (m(c) & m(a) & ~m(b)).any(axis=1)


def _as_box(arr) -> geo.Box:
    return tuple(geo.Interval(int(lo), int(hi)) for lo, hi in arr)


def _projection_check(samples, seed, diff_hits, chunk=20000) -> Verdict:
    rng = np.random.default_rng(seed)
    diff_hits = diff_hits or geo.box_diff_hits
    t0 = time.monotonic()
    done = 0
    positives = 0
    while done < samples:
        cnt = min(chunk, samples - done)
        B = random_boxes(rng, cnt)
        c, a, b = B[:, 0], B[:, 1], B[:, 2]
        grid = grid_diff_hits(c, a, b)
        meet = ((c[:, :, 0] <= a[:, :, 1]) & (a[:, :, 0] <= c[:, :, 1])).all(axis=1)
        per_axis = meet & (grid_axis_diff(c, a, b, 0) | grid_axis_diff(c, a, b, 1))
        for t in range(cnt):
            got = diff_hits(_as_box(c[t]), _as_box(a[t]), _as_box(b[t]))
            if not (got == grid[t] == per_axis[t]):
                triple = (_as_box(c[t]), _as_box(a[t]), _as_box(b[t]))
                return Verdict("projection", "refuted", triple,
                               [{"sample": done + t, "box_diff_hits": bool(got), "grid": bool(grid[t]),
                                 "per_axis": bool(per_axis[t])}],
                               {"samples": done + t + 1, "seconds": time.monotonic() - t0})
        positives += int(grid.sum())
        done += cnt
    return Verdict("projection", "verified", None,
                   [{"kind": "sampled", "samples": samples, "seed": seed, "grid": "half-integer [0,8]"}],
                   {"samples": samples, "hits": positives, "seconds": time.monotonic() - t0})


def _helly_check(samples, seed, witness=None) -> Verdict:
    rng = np.random.default_rng(seed)
    witness = witness or geo.helly_witness
    t0 = time.monotonic()
    triangles = 0
    for t in range(samples):
        B = random_boxes(rng, 1)[0]
        x, y, z = (_as_box(B[j]) for j in range(3))
        pairwise = geo.boxes_intersect(x, y) and geo.boxes_intersect(y, z) and geo.boxes_intersect(x, z)
        w = witness(x, y, z)
        if pairwise:
            triangles += 1
            ok = w is not None and all(geo.point_in_box(w, box) for box in (x, y, z))
        else:
            ok = w is None
        if not ok:
            return Verdict("helly", "refuted", (x, y, z), [{"sample": t, "witness": w}],
                           {"samples": t + 1, "seconds": time.monotonic() - t0})
    return Verdict("helly", "verified", None,
                   [{"kind": "sampled", "samples": samples, "seed": seed}],
                   {"samples": samples, "triangles": triangles, "seconds": time.monotonic() - t0})


def check_lemma(lemma: str, budget: Budget | None = None, engine: str = "endpoint", k: int = 5,
                samples: int = 100_000, seed: int = 0, diff_hits=None) -> Verdict:
    """Check one lemma; ``diff_hits`` substitutes the predicate under test (projection only)."""
    if lemma not in LEMMAS:
        raise ValueError(f"unknown lemma {lemma!r}; choose from {', '.join(LEMMAS)}")
    if budget is not None and budget.seconds is not None and budget.seconds <= 0:
        raise ValueError("budget must be positive")
    if lemma == "projection":
        return _projection_check(samples, seed, diff_hits)
    if lemma == "helly":
        return _helly_check(samples, seed)
    return _solver_lemma(lemma, budget, engine, k, seed)


# theorem --------------------------------------------------------------------

def check_theorem_decomposition(k: int = 5) -> dict:
    """Verify the L4 copy and all 2k L3 copies inside G(k) by label bijection."""
    if k < 1:
        raise ValueError("k must be at least 1")
    g = build_gadget(GadgetSpec("G", k))
    checks = []
    plan = [("L4", None, "a")] + [("L3", i, side) for i in range(1, k + 1) for side in ("a", "b")]
    for which, i, side in plan:
        entry = {"which": which, "i": i, "side": side if which == "L3" else None}
        try:
            subset, _ = embedded_subgadget(g, which, k, i, side)
            entry.update(ok=True, size=len(subset))
        except ValueError as exc:
            entry.update(ok=False, error=str(exc))
        checks.append(entry)
    return {"k": k, "n": g.n, "m": g.m, "embeddings": checks,
            "verified": sum(c["ok"] for c in checks), "all_ok": all(c["ok"] for c in checks)}


def check_theorem_full(budget: Budget | None = None, k: int = 5, engine: str = "before-cegar",
                       seed: int | None = None, checkpoint: str | None = None) -> Verdict:
    """Try to refute a rectangle representation of G(k).

    With ``checkpoint`` set, search statistics are rewritten to that JSON
    file every few thousand conflicts so a long run can be monitored.
    """
    g = build_gadget(GadgetSpec("G", k))
    t0 = time.time()

    def progress(st):
        if checkpoint:
            with open(checkpoint, "w") as fh:
                json.dump({"k": k, "engine": engine, "elapsed": time.time() - t0, **st}, fh, indent=2)

    out = decide_box_le(g, 2, engine=engine, budget=budget, seed=seed, progress=progress)
    progress(dict(out.stats, status=out.status.value))
    query = {"gadget": f"G({k})", "n": g.n, "m": g.m, "d": 2, "engine": engine,
             "outcome": out.status.value, "stats": out.stats}
    status = {"infeasible": "verified", "feasible": "refuted"}.get(out.status.value, "undecided")
    return Verdict("theorem", status, out.representation, [query], out.stats)
