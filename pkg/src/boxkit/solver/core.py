"""Decision procedures for "g has a d-box representation (with side constraints)".

Engines:

``endpoint``
    Endpoint-order encoding; the only engine that accepts side constraints.
``before-cegar``
    Interval-order encoding with lazily added 2+2 axioms.
``brute``
    Exhaustive sweep enumeration, n <= 7, no side constraints.

Every feasible answer is re-checked geometrically before it is returned.
"""

from __future__ import annotations

import enum
import os
import time
from dataclasses import dataclass, field

import numpy as np

from ..geometry import BoxRepresentation, verify_representation
from .before import BeforeEncoding, order_from_relation
from .brute import MAX_N, brute_decide
from .cnf import CNF
from .constraints import SideConstraint
from .endpoint import EndpointEncoding, parse_token
from .orders import EndpointOrder, realize
from .sat import Limits, SatStats, Solver

ENGINES = ("endpoint", "before-cegar", "brute")
DEFAULT_CLAUSE_CAP = 10**8


class SolverError(ValueError):
    pass


class UnsoundModel(AssertionError):
    """A model decoded to something that is not a valid representation."""


def default_seed() -> int:
    return int(os.environ.get("BOXKIT_SEED", "0"))


@dataclass(frozen=True)
class Budget:
    seconds: float | None = None
    conflicts: int | None = None
    memory_mb: float | None = None

    def __post_init__(self):
        for name in ("seconds", "conflicts", "memory_mb"):
            x = getattr(self, name)
            if x is not None and x <= 0:
                raise SolverError(f"budget {name} must be positive, got {x}")

    @classmethod
    def parse(cls, text: str) -> "Budget":
        """``"60"``, ``"60s"``, ``"conflicts=5000"``, ``"seconds=10,memory_mb=2048"``."""
        kw = {}
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            key, sep, val = part.partition("=")
            if not sep:
                key, val = "seconds", part.rstrip("s")
            key = key.strip()
            if key not in ("seconds", "conflicts", "memory_mb"):
                raise SolverError(f"unknown budget field {key!r}")
            try:
                kw[key] = int(val) if key == "conflicts" else float(val)
            except ValueError:
                raise SolverError(f"bad budget value {val!r}") from None
        if not kw:
            raise SolverError("empty budget")
        return cls(**kw)

    def limits(self, start: float) -> Limits:
        return Limits(deadline=None if self.seconds is None else start + self.seconds,
                      conflicts=self.conflicts, memory_mb=self.memory_mb)


class Status(enum.Enum):
    FEASIBLE = "feasible"
    INFEASIBLE = "infeasible"
    BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass
class SolveOutcome:
    status: Status
    representation: BoxRepresentation | None = None
    stats: dict = field(default_factory=dict)

    @property
    def feasible(self) -> bool:
        return self.status is Status.FEASIBLE

    @property
    def infeasible(self) -> bool:
        return self.status is Status.INFEASIBLE

    @property
    def exhausted(self) -> bool:
        return self.status is Status.BUDGET_EXHAUSTED


def check_model(g, rep: BoxRepresentation, constraints=()) -> None:
    bad = verify_representation(g, rep)
    if bad is not None:
        raise UnsoundModel(f"{bad.kind} intersection at ({bad.u}, {bad.v})")
    for con in constraints:
        if not con.holds(rep):
            raise UnsoundModel(f"model violates {con}")


def _validate(g, d, constraints, engine):
    if engine not in ENGINES:
        raise SolverError(f"unknown engine {engine!r}; choose from {', '.join(ENGINES)}")
    if d < 1:
        raise SolverError("d must be at least 1")
    for con in constraints:
        if not isinstance(con, SideConstraint):
            raise SolverError(f"not a side constraint: {con!r}")
        con.check_applicable(g.n, d)
    if constraints and engine != "endpoint":
        raise SolverError(f"engine {engine!r} does not support side constraints")
    if engine == "brute" and g.n > MAX_N:
        raise SolverError(f"brute engine needs n <= {MAX_N}, got n={g.n}")


def _load(solver: Solver, cnf: CNF) -> None:
    solver.ensure_vars(cnf.nvars)
    solver.add_clauses(cnf.clauses)
    cnf.clauses.clear()


def decide_box_le(g, d: int, constraints=(), engine: str = "auto", budget: Budget | None = None,
                  seed: int | None = None, progress=None) -> SolveOutcome:
    """Does ``g`` have a d-box representation satisfying ``constraints``?

    ``progress`` is called with a stats dict every few thousand conflicts
    (and after every refinement round of the before-cegar engine).
    """
    constraints = list(constraints)
    if engine == "auto":
        engine = "endpoint" if constraints else "before-cegar"
    _validate(g, d, constraints, engine)
    budget = budget or Budget()
    seed = default_seed() if seed is None else seed
    t0 = time.monotonic()
    if engine == "brute":
        rep = brute_decide(g, d)
        stats = {"engine": engine, "seconds": time.monotonic() - t0}
        if rep is None:
            return SolveOutcome(Status.INFEASIBLE, None, stats)
        check_model(g, rep)
        return SolveOutcome(Status.FEASIBLE, rep, stats)
    solver = Solver(seed)
    limits = budget.limits(t0)
    if progress is not None:
        limits.on_progress = lambda st: progress(dict(st.as_dict(), engine=engine))
    if engine == "endpoint":
        enc = EndpointEncoding(g, d, constraints)
        _load(solver, enc.cnf)
        res = solver.solve(limits)
        stats = _stats(engine, solver.stats, t0, variables=solver.nvars)
        if res is None:
            return SolveOutcome(Status.BUDGET_EXHAUSTED, None, stats)
        if not res:
            return SolveOutcome(Status.INFEASIBLE, None, stats)
        rep = enc.representation(lambda x: solver.model()[x - 1])
        check_model(g, rep, constraints)
        return SolveOutcome(Status.FEASIBLE, rep, stats)
    return _solve_cegar(g, d, solver, limits, t0, progress)


def _stats(engine, st: SatStats, t0, **extra) -> dict:
    out = {"engine": engine, **st.as_dict(), "seconds": time.monotonic() - t0}
    out.update(extra)
    return out


def _solve_cegar(g, d, solver: Solver, limits: Limits, t0, progress=None) -> SolveOutcome:
    enc = BeforeEncoding(g, d)
    _load(solver, enc.cnf)
    rounds = 0
    axioms = 0
    while True:
        res = solver.solve(limits)
        stats = _stats("before-cegar", solver.stats, t0, rounds=rounds, axioms_added=axioms,
                       variables=solver.nvars)
        if res is None:
            return SolveOutcome(Status.BUDGET_EXHAUSTED, None, stats)
        if not res:
            return SolveOutcome(Status.INFEASIBLE, None, stats)
        model = solver.model()
        value = lambda x: model[x - 1]  # noqa: E731
        missing = enc.violations(value)
        if not missing:
            rep = realize(enc.orders(value), g.n)
            check_model(g, rep)
            return SolveOutcome(Status.FEASIBLE, rep, stats)
        rounds += 1
        for c in missing:
            key = tuple(sorted(c))
            if key in enc.added:
                raise UnsoundModel(f"model violates an axiom already added: {c}")
            enc.added.add(key)
            solver.add_clause(c)
        axioms += len(missing)
        if progress is not None:
            progress(dict(stats, rounds=rounds, axioms_added=axioms))


def compute_boxicity(g, d_max: int = 3, engine: str = "auto", budget: Budget | None = None,
                     seed: int | None = None):
    """Smallest d <= d_max admitting a representation.

    Returns an int (0 for complete graphs, by convention), ``None`` when the
    boxicity exceeds ``d_max``, or the exhausted ``SolveOutcome`` if the
    budget ran out before an answer.
    """
    if d_max < 1:
        raise SolverError("d_max must be at least 1")
    if g.is_complete():
        return 0
    budget = budget or Budget()
    t0 = time.monotonic()
    for d in range(1, d_max + 1):
        left = budget
        if budget.seconds is not None:
            remaining = budget.seconds - (time.monotonic() - t0)
            if remaining <= 0:
                return SolveOutcome(Status.BUDGET_EXHAUSTED, None, {"d": d})
            left = Budget(remaining, budget.conflicts, budget.memory_mb)
        out = decide_box_le(g, d, engine=engine, budget=left, seed=seed)
        if out.feasible:
            return d
        if out.exhausted:
            out.stats["d"] = d
            return out
    return None


# DIMACS export / import -------------------------------------------------------

@dataclass
class VarMap:
    """What each exported variable means; enough to decode a model."""

    engine: str
    n: int
    d: int
    nvars: int
    atoms: dict  # var -> ("le", tok1, tok2, dim) or ("before", u, v, dim)

    @classmethod
    def from_dimacs(cls, text: str) -> "VarMap":
        atoms = {}
        engine = n = d = nvars = None
        for line in text.splitlines():
            parts = line.split()
            if not parts:
                continue
            if parts[0] == "p":
                nvars = int(parts[2])
            if parts[0] != "c" or len(parts) < 2:
                continue
            if parts[1] == "boxkit":
                kv = dict(p.split("=", 1) for p in parts[2:])
                engine, n, d = kv["engine"], int(kv["n"]), int(kv["d"])
            elif parts[1] == "map":
                var = int(parts[2])
                if parts[3] == "le":
                    atoms[var] = ("le", parse_token(parts[4]), parse_token(parts[5]), int(parts[7]))
                elif parts[3] == "before":
                    atoms[var] = ("before", int(parts[4]), int(parts[5]), int(parts[7]))
        if engine is None or nvars is None:
            raise SolverError("DIMACS text lacks the boxkit header or problem line")
        return cls(engine, n, d, nvars, atoms)


def export_cnf(g, d: int, constraints=(), engine: str = "endpoint",
               clause_cap: int = DEFAULT_CLAUSE_CAP) -> tuple[str, VarMap]:
    """DIMACS text of the encoding plus the map needed by ``import_model``.

    The before-cegar engine exports its full (eager) axiom set.
    """
    constraints = list(constraints)
    _validate(g, d, constraints, engine)
    if engine == "brute":
        raise SolverError("the brute engine has no CNF encoding")
    cnf = CNF()

    def sink(c):
        if len(cnf.clauses) >= clause_cap:
            raise SolverError(f"encoding exceeds the clause cap of {clause_cap}")
        cnf.clauses.append(c)

    cnf._sink = sink
    if engine == "endpoint":
        EndpointEncoding(g, d, constraints, cnf)
    else:
        enc = BeforeEncoding(g, d, cnf)
        for c in enc.all_axioms():
            cnf.add(c)
    header = [f"boxkit engine={engine} n={g.n} d={d}"]
    text = cnf.to_dimacs(header)
    atoms = {}
    for v, name in cnf.names.items():
        if name[0] == "le":
            atoms[v] = ("le", parse_token(name[1]), parse_token(name[2]), name[4])
        elif name[0] == "before":
            atoms[v] = ("before", name[1], name[2], name[4])
    return text, VarMap(engine, g.n, d, cnf.nvars, atoms)


def parse_model(text: str) -> list[int]:
    """Signed literals from a DIMACS model ("v ..." lines or a bare line)."""
    lits = []
    for line in text.splitlines():
        parts = line.split()
        if not parts or parts[0] in ("c", "s"):
            continue
        if parts[0] == "v":
            parts = parts[1:]
        lits.extend(int(p) for p in parts if p != "0")
    return lits


def import_model(varmap: VarMap, assignment, g=None, constraints=()) -> BoxRepresentation:
    """Decode an external model; verify it against ``g`` when given."""
    if isinstance(assignment, str):
        assignment = parse_model(assignment)
    truth = {}
    for lit in assignment:
        if lit == 0:
            continue
        if abs(lit) > varmap.nvars:
            raise SolverError(f"literal {lit} beyond the {varmap.nvars} exported variables")
        if -lit in truth and truth.get(-lit):
            raise SolverError(f"assignment sets both {lit} and {-lit}")
        truth[lit] = True
    missing = [v for v in varmap.atoms if v not in truth and -v not in truth]
    if missing:
        raise SolverError(f"assignment leaves {len(missing)} mapped variables unassigned")

    def val(v):
        return v in truth

    n, d = varmap.n, varmap.d
    if varmap.engine == "endpoint":
        le = {}
        for v, (_, e, f, i) in varmap.atoms.items():
            le[i, e, f] = val(v)
        try:
            orders = [EndpointOrder.from_relation(lambda e, f, i=i: le[i, e, f], 2 * n)
                      for i in range(1, d + 1)]
        except ValueError as exc:
            raise SolverError(f"model does not encode endpoint orders: {exc}") from None
    else:
        rel = {i: np.zeros((n, n), dtype=bool) for i in range(1, d + 1)}
        for v, (_, u, w, i) in varmap.atoms.items():
            rel[i][u, w] = val(v)
        try:
            orders = [order_from_relation(rel[i]) for i in range(1, d + 1)]
        except ValueError as exc:
            raise SolverError(f"model does not encode interval orders: {exc}") from None
    rep = realize(orders, n)
    if g is not None:
        bad = verify_representation(g, rep)
        if bad is not None:
            raise SolverError(f"imported model fails verification: {bad.kind} intersection "
                              f"at ({bad.u}, {bad.v})")
        for con in constraints:
            if not con.holds(rep):
                raise SolverError(f"imported model violates {con}")
    return rep
