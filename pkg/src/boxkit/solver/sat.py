"""A small conflict-driven clause-learning SAT solver.

Two watched literals, first-UIP learning with local minimisation, VSIDS
branching over a lazy heap, phase saving, Luby restarts and LBD-based
learnt clause reduction.  Clauses can be added between ``solve`` calls
(learnt clauses are kept), which the lazy-refinement engines rely on.

Variables are DIMACS style on the outside (1-based, negative literal =
negation) and ``2*v + sign`` on the inside.
"""

from __future__ import annotations

import heapq
import random
import resource
import time
from dataclasses import dataclass, field


def luby(i: int) -> int:
    """i-th element (0-based) of the Luby sequence 1 1 2 1 1 2 4 ..."""
    size, seq = 1, 0
    while size < i + 1:
        seq += 1
        size = 2 * size + 1
    while size - 1 != i:
        size = (size - 1) >> 1
        seq -= 1
        i = i % size
    return 1 << seq


@dataclass
class SatStats:
    decisions: int = 0
    conflicts: int = 0
    propagations: int = 0
    learned: int = 0
    restarts: int = 0
    reductions: int = 0
    solve_calls: int = 0
    seconds: float = 0.0

    def as_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class Limits:
    """Per-call search limits; ``None`` means unlimited."""

    deadline: float | None = None  # absolute time.monotonic() value
    conflicts: int | None = None    # cap on the solver's total conflict count
    memory_mb: float | None = None
    on_progress: object = field(default=None, repr=False)  # callable(stats) every few thousand conflicts


class Solver:
    RESTART_BASE = 100
    VAR_DECAY = 0.95

    def __init__(self, seed: int = 0):
        self.nvars = 0
        self.value: list[int] = []     # per literal: 1 true, -1 false, 0 unassigned
        self.level: list[int] = []
        self.reason: list = []
        self.activity: list[float] = []
        self.phase: list[int] = []     # saved literal sign per variable
        self.seen: list[int] = []
        self.watches: list[list] = []
        self.clauses: list[list[int]] = []
        self.learnts: list[list[int]] = []
        self.lbd: dict[int, int] = {}
        self.trail: list[int] = []
        self.trail_lim: list[int] = []
        self.qhead = 0
        self.heap: list = []
        self.var_inc = 1.0
        self.ok = True
        self.rng = random.Random(seed)
        self.stats = SatStats()
        self.max_learnts = 4000.0
        self._model: list[bool] | None = None
        self._simplified_at = 0

    # -- construction -----------------------------------------------------
    def new_var(self) -> int:
        v = self.nvars
        self.nvars += 1
        self.value += (0, 0)
        self.level.append(0)
        self.reason.append(None)
        # tiny seeded jitter fixes the initial branching order
        act = self.rng.random() * 1e-5
        self.activity.append(act)
        self.phase.append(1)
        self.seen.append(0)
        self.watches += ([], [])
        heapq.heappush(self.heap, (-act, v))
        return v + 1

    def ensure_vars(self, n: int) -> None:
        while self.nvars < n:
            self.new_var()

    @staticmethod
    def _lit(x: int) -> int:
        return 2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1

    def add_clause(self, lits) -> bool:
        """Add a clause of DIMACS literals.  Returns False once the formula is UNSAT."""
        if not self.ok:
            return False
        if self.trail_lim:
            self._cancel_until(0)
        value = self.value
        out = []
        seen = set()
        for x in lits:
            if x == 0:
                raise ValueError("literal 0 is reserved")
            if abs(x) > self.nvars:
                self.ensure_vars(abs(x))
            p = self._lit(x)
            if p ^ 1 in seen or value[p] == 1:
                return True  # tautology or satisfied at level 0
            if p in seen or value[p] == -1:
                continue
            seen.add(p)
            out.append(p)
        if not out:
            self.ok = False
            return False
        if len(out) == 1:
            self._assign(out[0], None)
            if self._propagate() is not None:
                self.ok = False
            return self.ok
        self.clauses.append(out)
        self.watches[out[0]].append(out)
        self.watches[out[1]].append(out)
        return True

    def add_clauses(self, clauses) -> bool:
        """Bulk ``add_clause``; fast when the solver has no assignments yet."""
        if self.trail or not self.ok:
            for c in clauses:
                if not self.add_clause(c):
                    return False
            return True
        units = []
        watches = self.watches
        store = self.clauses
        top = self.nvars
        for c in clauses:
            if len(c) < 2:
                units.append(c)
                continue
            lits = [2 * x - 2 if x > 0 else -2 * x - 1 for x in c]
            if len({p >> 1 for p in lits}) != len(lits):
                units.append(c)  # duplicate or complementary literals: slow path
                continue
            m = max(lits) >> 1
            if m >= top:
                self.ensure_vars(m + 1)
                top = self.nvars
            store.append(lits)
            watches[lits[0]].append(lits)
            watches[lits[1]].append(lits)
        for c in units:
            if not self.add_clause(c):
                return False
        return True

    # -- core ---------------------------------------------------------------
    def _assign(self, p: int, reason) -> None:
        self.value[p] = 1
        self.value[p ^ 1] = -1
        v = p >> 1
        self.level[v] = len(self.trail_lim)
        self.reason[v] = reason
        self.trail.append(p)

    def _propagate(self):
        value = self.value
        watches = self.watches
        trail = self.trail
        level = self.level
        reason = self.reason
        dl = len(self.trail_lim)
        qhead = self.qhead
        props = 0
        confl = None
        while qhead < len(trail):
            false_lit = trail[qhead] ^ 1
            qhead += 1
            props += 1
            ws = watches[false_lit]
            n = len(ws)
            i = j = 0
            while i < n:
                c = ws[i]
                i += 1
                first = c[0]
                if first == false_lit:
                    first = c[1]
                    c[0] = first
                    c[1] = false_lit
                if value[first] == 1:
                    ws[j] = c
                    j += 1
                    continue
                for k in range(2, len(c)):
                    lk = c[k]
                    if value[lk] != -1:
                        c[1] = lk
                        c[k] = false_lit
                        watches[lk].append(c)
                        break
                else:
                    ws[j] = c
                    j += 1
                    if value[first] == -1:
                        while i < n:
                            ws[j] = ws[i]
                            j += 1
                            i += 1
                        confl = c
                    else:
                        value[first] = 1
                        value[first ^ 1] = -1
                        v = first >> 1
                        level[v] = dl
                        reason[v] = c
                        trail.append(first)
            del ws[j:]
            if confl is not None:
                break
        self.qhead = qhead
        self.stats.propagations += props
        return confl

    def _bump(self, v: int) -> None:
        act = self.activity[v] + self.var_inc
        self.activity[v] = act
        if act > 1e100:
            self.activity = [a * 1e-100 for a in self.activity]
            self.var_inc *= 1e-100
            self._rebuild_heap()
        elif self.value[2 * v] == 0:
            heapq.heappush(self.heap, (-self.activity[v], v))

    def _rebuild_heap(self) -> None:
        self.heap = [(-self.activity[v], v) for v in range(self.nvars) if self.value[2 * v] == 0]
        heapq.heapify(self.heap)

    def _analyze(self, confl):
        seen = self.seen
        level = self.level
        reason = self.reason
        trail = self.trail
        dl = len(self.trail_lim)
        learnt = [0]
        path = 0
        p = -1
        idx = len(trail) - 1
        touched = []
        while True:
            start = 0 if p == -1 else 1
            for k in range(start, len(confl)):
                q = confl[k]
                v = q >> 1
                if not seen[v] and level[v] > 0:
                    seen[v] = 1
                    touched.append(v)
                    self._bump(v)
                    if level[v] >= dl:
                        path += 1
                    else:
                        learnt.append(q)
            while not seen[trail[idx] >> 1]:
                idx -= 1
            p = trail[idx]
            idx -= 1
            confl = reason[p >> 1]
            seen[p >> 1] = 0
            path -= 1
            if path == 0:
                break
        learnt[0] = p ^ 1
        # drop literals implied by other literals of the clause
        if len(learnt) > 2:
            kept = [learnt[0]]
            for q in learnt[1:]:
                r = reason[q >> 1]
                if r is None:
                    kept.append(q)
                    continue
                for x in r:
                    w = x >> 1
                    if w != q >> 1 and not seen[w] and level[w] > 0:
                        kept.append(q)
                        break
            learnt = kept
        for v in touched:
            seen[v] = 0
        if len(learnt) == 1:
            back = 0
        else:
            best = 1
            for k in range(2, len(learnt)):
                if level[learnt[k] >> 1] > level[learnt[best] >> 1]:
                    best = k
            learnt[1], learnt[best] = learnt[best], learnt[1]
            back = level[learnt[1] >> 1]
        lbd = len({level[q >> 1] for q in learnt})
        return learnt, back, lbd

    def _cancel_until(self, lvl: int) -> None:
        if len(self.trail_lim) <= lvl:
            return
        value = self.value
        phase = self.phase
        heap = self.heap
        act = self.activity
        stop = self.trail_lim[lvl]
        trail = self.trail
        for k in range(len(trail) - 1, stop - 1, -1):
            p = trail[k]
            v = p >> 1
            value[p] = 0
            value[p ^ 1] = 0
            phase[v] = p & 1
            self.reason[v] = None
            heapq.heappush(heap, (-act[v], v))
        del trail[stop:]
        del self.trail_lim[lvl:]
        self.qhead = len(trail)
        if len(heap) > 8 * self.nvars + 1000:
            self._rebuild_heap()

    def _pick_branch(self) -> int:
        heap = self.heap
        value = self.value
        act = self.activity
        while heap:
            a, v = heapq.heappop(heap)
            if value[2 * v] == 0 and -a == act[v]:
                return 2 * v + self.phase[v]
        for v in range(self.nvars):
            if value[2 * v] == 0:
                return 2 * v + self.phase[v]
        return -1

    def _simplify_db(self) -> None:
        """At level 0: drop satisfied clauses, strip false literals, trim learnts."""
        value = self.value
        self._simplified_at = len(self.trail)

        def clean(cls):
            out = []
            for c in cls:
                if any(value[x] == 1 for x in c):
                    continue
                c2 = [x for x in c if value[x] == 0]
                out.append((c2, self.lbd.get(id(c), len(c))))
            return out

        self.clauses = [c for c, _ in clean(self.clauses)]
        learnts = clean(self.learnts)
        if len(learnts) > self.max_learnts:
            learnts.sort(key=lambda cl: (cl[1] if len(cl[0]) > 2 else 0, len(cl[0])))
            keep = int(self.max_learnts / 2)
            learnts = [cl for i, cl in enumerate(learnts) if i < keep or len(cl[0]) <= 2]
            self.max_learnts *= 1.1
            self.stats.reductions += 1
        self.learnts = [c for c, _ in learnts]
        self.lbd = {id(c): min(lbd, len(c)) for c, lbd in learnts}
        for w in self.watches:
            w.clear()
        for c in self.clauses:
            self.watches[c[0]].append(c)
            self.watches[c[1]].append(c)
        for c in self.learnts:
            self.watches[c[0]].append(c)
            self.watches[c[1]].append(c)

    def solve(self, limits: Limits | None = None) -> bool | None:
        """True (model in ``model()``), False (refuted), None (limit hit)."""
        self.stats.solve_calls += 1
        self._model = None
        t0 = time.monotonic()
        try:
            return self._search(limits or Limits())
        finally:
            self.stats.seconds += time.monotonic() - t0
            self._cancel_until(0)

    def _search(self, lim: Limits) -> bool | None:
        if not self.ok:
            return False
        if self._propagate() is not None:
            self.ok = False
            return False
        stats = self.stats
        restart_i = 0
        budget = luby(restart_i) * self.RESTART_BASE
        since_restart = 0
        if len(self.trail) > self._simplified_at:
            self._simplify_db()
        while True:
            confl = self._propagate()
            if confl is not None:
                stats.conflicts += 1
                since_restart += 1
                if not self.trail_lim:
                    self.ok = False
                    return False
                learnt, back, lbd = self._analyze(confl)
                self._cancel_until(back)
                if len(learnt) == 1:
                    self._assign(learnt[0], None)
                else:
                    self.learnts.append(learnt)
                    self.lbd[id(learnt)] = lbd
                    self.watches[learnt[0]].append(learnt)
                    self.watches[learnt[1]].append(learnt)
                    self._assign(learnt[0], learnt)
                stats.learned += 1
                self.var_inc /= self.VAR_DECAY
                # conflicts are slow relative to a clock read, so check every time
                if self._out_of_budget(lim):
                    return None
                if lim.on_progress is not None and stats.conflicts & 4095 == 0:
                    lim.on_progress(stats)
                continue
            if since_restart >= budget:
                stats.restarts += 1
                restart_i += 1
                budget = luby(restart_i) * self.RESTART_BASE
                since_restart = 0
                self._cancel_until(0)
                if self._propagate() is not None:
                    self.ok = False
                    return False
                if len(self.learnts) > self.max_learnts or len(self.trail) > 2 * self._simplified_at + 100:
                    self._simplify_db()
                continue
            p = self._pick_branch()
            if p < 0:
                self._model = [self.value[2 * v] == 1 for v in range(self.nvars)]
                return True
            stats.decisions += 1
            if stats.decisions & 127 == 0 and self._out_of_budget(lim):
                return None
            self.trail_lim.append(len(self.trail))
            self._assign(p, None)

    def _out_of_budget(self, lim: Limits) -> bool:
        if lim.conflicts is not None and self.stats.conflicts >= lim.conflicts:
            return True
        if lim.deadline is not None and time.monotonic() >= lim.deadline:
            return True
        if lim.memory_mb is not None:
            rss = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / 1024.0
            if rss > lim.memory_mb:
                return True
        return False

    def model(self) -> list[bool]:
        """Truth value per variable, indexed from 0 (DIMACS variable v -> index v-1)."""
        if self._model is None:
            raise RuntimeError("no model: last solve did not return True")
        return self._model

    def value_of(self, x: int) -> bool:
        m = self.model()
        return m[x - 1] if x > 0 else not m[-x - 1]
