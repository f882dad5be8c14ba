import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from boxkit.gadgets import build_gadget
from boxkit.geometry import BoxRepresentation, Interval, verify_representation
from boxkit.graph import Graph, complete_graph, cycle_graph, path_graph
from boxkit.solver import (
    Budget, EndpointOrder, ForbidCornerMembership, ForbidCrossing, ForbidProjectionInCap,
    RequireBoxInUnion, RequireCrossing, RequireIntersectionContained, SolverError, Status,
    compute_boxicity, decide_box_le, orders_of, realize,
)
from boxkit.solver.before import BeforeEncoding, order_from_relation
from boxkit.solver.brute import brute_decide
from boxkit.solver.cnf import evaluate
from boxkit.solver.constraints import ConstraintError
from boxkit.solver.endpoint import EndpointEncoding, parse_token, token_name
from boxkit.solver.orders import L, OrderError, R

from conftest import graph_of, random_graph, random_rep
import oracles


ENGINES = ("endpoint", "before-cegar", "brute")


# -- endpoint orders and realisation -----------------------------------------

class TestOrders:
    def test_all_tied(self):
        o = EndpointOrder((0, 0, 0, 0))
        rep = realize([o], 2)
        assert rep.boxes == ((Interval(0, 0),), (Interval(0, 0),))

    def test_rank_readoff(self):
        # L0 < L1 < R0 < R1
        o = EndpointOrder((0, 2, 1, 3))
        assert realize([o]).boxes == ((Interval(0, 2),), (Interval(1, 3),))

    def test_rejects_reversed_endpoints(self):
        with pytest.raises(OrderError):
            EndpointOrder((1, 0))

    def test_from_relation_rejects_non_preorder(self):
        with pytest.raises(OrderError):
            EndpointOrder.from_relation(lambda e, f: (f - e) % 4 in (0, 1, 2), 4)

    @settings(max_examples=200)
    @given(st.integers(0, 2**32))
    def test_snap_round_trip(self, seed):
        rng = random.Random(seed)
        rep = random_rep(rng, rng.randint(1, 6), rng.randint(1, 3), hi=20)
        back = realize(orders_of(rep))
        assert orders_of(back) == orders_of(rep)
        assert all(0 <= t < 2 * rep.n for b in back.boxes for iv in b for t in iv)
        g = graph_of(rep)
        assert verify_representation(g, back) is None

    def test_tokens(self):
        assert token_name(L(3)) == "L3" and token_name(R(5)) == "R5"
        assert parse_token("R5") == R(5)
        with pytest.raises(ValueError):
            parse_token("X1")


# -- side-constraint formulas agree with the geometry --------------------------

def all_constraints(n):
    out = []
    for u, v in itertools.permutations(range(n), 2):
        out += [RequireCrossing(u, v), ForbidCrossing(u, v)]
    for c, a, b in itertools.permutations(range(n), 3):
        out += [RequireBoxInUnion(c, a, b), RequireIntersectionContained(c, a, b),
                ForbidProjectionInCap(1, c, a, b), ForbidProjectionInCap(2, c, a, b),
                ForbidCornerMembership(c, a, b)]
    return out


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32))
def test_constraint_formula_matches_geometry(seed):
    rng = random.Random(seed)
    rep = random_rep(rng, 4, 2, hi=5)
    g = graph_of(rep)
    enc = EndpointEncoding(g, 2)
    orders = orders_of(rep)
    value = {}
    for i, o in enumerate(orders, 1):
        for e in range(enc.T):
            for f in range(enc.T):
                if e != f:
                    value[enc.le(i, e, f)] = o.le(e, f)

    def lit(x):
        return value[x] if x > 0 else not value[-x]

    for con in all_constraints(4):
        truth = oracles.constraint_truth(con, rep)
        assert con.holds(rep) == truth, con
        assert evaluate(con.formula(enc, 2), lit) == truth, con


# -- decisions ---------------------------------------------------------------

class TestDecide:
    @pytest.mark.parametrize("engine", ENGINES)
    def test_small_examples(self, engine):
        assert decide_box_le(path_graph(4), 1, engine=engine).feasible
        assert decide_box_le(cycle_graph(4), 1, engine=engine).infeasible
        out = decide_box_le(cycle_graph(4), 2, engine=engine)
        assert out.feasible and verify_representation(cycle_graph(4), out.representation) is None

    def test_engines_agree_on_random_small_graphs(self):
        rng = random.Random(5)
        for _ in range(60):
            g = random_graph(rng, rng.randint(2, 7), rng.uniform(0.2, 0.8))
            for d in (1, 2):
                answers = {e: decide_box_le(g, d, engine=e).status for e in ENGINES}
                assert len(set(answers.values())) == 1, (g, d, answers)

    def test_engine_restrictions(self):
        with pytest.raises(SolverError):
            decide_box_le(build_gadget("L1"), 2, [RequireBoxInUnion(2, 0, 1)], engine="before-cegar")
        with pytest.raises(SolverError):
            decide_box_le(build_gadget("L1"), 2, [RequireBoxInUnion(2, 0, 1)], engine="brute")
        with pytest.raises(SolverError):
            decide_box_le(path_graph(8), 1, engine="brute")
        with pytest.raises(SolverError):
            decide_box_le(path_graph(3), 0)
        with pytest.raises(SolverError):
            decide_box_le(path_graph(3), 1, engine="magic")
        with pytest.raises(ConstraintError):
            decide_box_le(path_graph(3), 1, [RequireCrossing(0, 1)], engine="endpoint")
        with pytest.raises(ConstraintError):
            decide_box_le(path_graph(3), 2, [RequireCrossing(0, 5)], engine="endpoint")

    def test_intersection_containment_any_dimension(self):
        g = path_graph(3)
        # 0 & 1 meet but 0 and 2 are disjoint, so 0 & 1 cannot sit inside 2
        assert decide_box_le(g, 1, [RequireIntersectionContained(0, 1, 2)], engine="endpoint").infeasible
        # 0 & 2 is empty, so containment is vacuous
        assert decide_box_le(g, 3, [RequireIntersectionContained(0, 2, 1)], engine="endpoint").feasible
        out = decide_box_le(complete_graph(3), 1, [RequireIntersectionContained(0, 1, 2)], engine="endpoint")
        assert out.feasible and RequireIntersectionContained(0, 1, 2).holds(out.representation)

    def test_feasible_with_constraints_is_rechecked(self):
        g = complete_graph(2)
        out = decide_box_le(Graph.from_edges(2, [(0, 1)]), 2, [RequireCrossing(0, 1)], engine="endpoint")
        assert out.feasible and RequireCrossing(0, 1).holds(out.representation)
        out = decide_box_le(g, 2, [ForbidCrossing(0, 1)], engine="endpoint")
        assert out.feasible and not RequireCrossing(0, 1).holds(out.representation)

    def test_budget_exhausted_is_not_infeasible(self):
        g = build_gadget("L4")
        cons = [ForbidCrossing(g.vertex("a"), g.vertex(f"c{i}")) for i in range(1, 6)]
        cons += [ForbidCrossing(g.vertex("b"), g.vertex(f"c{i}")) for i in range(1, 6)]
        out = decide_box_le(g, 2, cons, engine="endpoint", budget=Budget(conflicts=5))
        assert out.status is Status.BUDGET_EXHAUSTED and out.stats["conflicts"] >= 5

    def test_cegar_statistics(self):
        rng = random.Random(9)
        g = random_graph(rng, 10, 0.5)
        enc = BeforeEncoding(g, 2)
        out = decide_box_le(g, 2, engine="before-cegar")
        assert out.stats["rounds"] <= enc.count_axioms()
        assert out.stats["axioms_added"] <= enc.count_axioms()

    def test_progress_callback(self):
        seen = []
        rng = random.Random(2)
        g = random_graph(rng, 12, 0.5)
        decide_box_le(g, 2, engine="before-cegar", progress=seen.append)
        assert all("rounds" in s for s in seen)

    def test_seed_independent_outcome(self):
        rng = random.Random(4)
        for _ in range(10):
            g = random_graph(rng, 8, 0.5)
            assert len({decide_box_le(g, 2, engine="endpoint", seed=s).status for s in range(3)}) == 1

    def test_env_seed(self, monkeypatch):
        from boxkit.solver.core import default_seed
        monkeypatch.setenv("BOXKIT_SEED", "17")
        assert default_seed() == 17


class TestProperties:
    def test_monotone_in_d(self):
        rng = random.Random(21)
        for _ in range(25):
            g = random_graph(rng, rng.randint(3, 8), rng.uniform(0.2, 0.8))
            out = decide_box_le(g, 1)
            if out.feasible:
                assert verify_representation(g, out.representation.padded(2)) is None
                assert decide_box_le(g, 2).feasible

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2**32))
    def test_snapping_completeness(self, seed):
        # every concrete representation is a model of the endpoint encoding
        rng = random.Random(seed)
        rep = random_rep(rng, rng.randint(2, 6), 2, hi=8)
        g = graph_of(rep)
        enc = EndpointEncoding(g, 2)
        enc.fix_orders(orders_of(rep))
        from boxkit.solver.sat import Solver
        s = Solver()
        s.ensure_vars(enc.cnf.nvars)
        s.add_clauses(enc.cnf.clauses)
        assert s.solve() is True

    @settings(max_examples=40, deadline=None)
    @given(st.integers(0, 2**32))
    def test_interval_orders_from_representations(self, seed):
        rng = random.Random(seed)
        rep = random_rep(rng, rng.randint(1, 7), 1, hi=10)
        ivs = [b[0] for b in rep.boxes]
        B = np.array([[p.hi < q.lo for q in ivs] for p in ivs])
        o = order_from_relation(B)
        back = realize([o])
        assert all((back[u][0].hi < back[v][0].lo) == B[u, v] for u in range(rep.n) for v in range(rep.n))

    def test_two_plus_two_rejected(self):
        B = np.zeros((4, 4), dtype=bool)
        B[0, 1] = B[2, 3] = True
        with pytest.raises(ValueError):
            order_from_relation(B)


class TestBrute:
    def test_c4(self):
        assert brute_decide(cycle_graph(4), 1) is None
        assert brute_decide(cycle_graph(4), 2) is not None

    def test_all_graphs_on_four_vertices_d1(self):
        # a "no" from the sweep must survive a search over all small interval layouts
        for edges in oracles.all_edge_sets(4):
            g = Graph.from_edges(4, edges)
            rep = brute_decide(g, 1)
            if rep is not None:
                assert verify_representation(g, rep) is None
            else:
                assert not any(verify_representation(g, r) is None for r in _all_1d(4))


def _all_1d(n, hi=None):
    # endpoints placed on maximal cliques need at most n distinct coordinates
    hi = n if hi is None else hi
    ivs = [Interval(a, b) for a in range(hi) for b in range(a, hi)]
    for combo in itertools.product(ivs, repeat=n):
        yield BoxRepresentation(1, tuple((iv,) for iv in combo))


class TestKnownValues:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_complete(self, n):
        assert compute_boxicity(complete_graph(n)) == 0
        assert compute_boxicity(path_graph(2)) == 0

    @pytest.mark.parametrize("n", range(3, 8))
    def test_paths(self, n):
        assert compute_boxicity(path_graph(n), engine="brute") == 1

    def test_caterpillar(self):
        g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 5), (2, 6)])
        assert compute_boxicity(g) == 1

    def test_c4_and_spider(self):
        spider = Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
        for engine in ENGINES:
            assert compute_boxicity(cycle_graph(4), engine=engine) == 2
            assert compute_boxicity(spider, engine=engine) == 2

    def test_above_cap(self):
        assert compute_boxicity(cycle_graph(4), d_max=1) is None

    def test_budget_parse(self):
        assert Budget.parse("60") == Budget(seconds=60)
        assert Budget.parse("60s") == Budget(seconds=60)
        assert Budget.parse("conflicts=5000") == Budget(conflicts=5000)
        assert Budget.parse("seconds=10,memory_mb=2048") == Budget(seconds=10, memory_mb=2048)
        for bad in ("", "x=1", "-5", "seconds=abc"):
            with pytest.raises(SolverError):
                Budget.parse(bad)
