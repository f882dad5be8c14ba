"""Command-line interface.

Exit codes: 0 success / feasible / verified, 1 a definite "no" (infeasible,
refuted, failed verification), 2 usage error, 3 budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from . import geometry as geo
from .gadgets import GADGETS, GadgetSpec, build_gadget
from .graph import GraphError, is_2_tree, is_series_parallel, parse_graph, serialize_graph
from .render import render_svg
from .solver import (ENGINES, Budget, SolveOutcome, SolverError, compute_boxicity,
                     decide_box_le, export_cnf, import_model)
from .solver.constraints import CONSTRAINT_TYPES, ConstraintError
from .solver.core import VarMap, default_seed
from .verify import LEMMAS, check_lemma, check_theorem_decomposition, check_theorem_full

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
INTERVAL_CHECK_MAX_N = 40


def recognize(g, interval_max_n: int = INTERVAL_CHECK_MAX_N, budget: Budget | None = None) -> dict:
    """Class memberships we can decide for ``g``."""
    sp = is_series_parallel(g)
    report = {"n": g.n, "m": g.m, "series_parallel": sp, "two_tree": is_2_tree(g),
              "edge_maximal_sp": sp and g.n >= 2 and g.m == 2 * g.n - 3}
    if g.n <= interval_max_n:
        out = decide_box_le(g, 1, engine="before-cegar", budget=budget or Budget(seconds=30))
        report["interval"] = None if out.exhausted else out.feasible
    else:
        report["interval"] = None
    return report


def _read(path):
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _budget(args) -> Budget:
    if getattr(args, "budget", None) is None:
        return Budget()
    return Budget.parse(args.budget)


def _vertex(g, token: str) -> int:
    if token.lstrip("-").isdigit():
        v = int(token)
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
        return v
    return g.vertex(token)


def parse_constraint(g, text: str):
    """``RequireCrossing:a,b`` or ``ForbidProjectionInCap:1,c,a,b``."""
    name, _, rest = text.partition(":")
    cls = CONSTRAINT_TYPES.get(name)
    if cls is None:
        raise ConstraintError(f"unknown constraint {name!r}; choose from {', '.join(CONSTRAINT_TYPES)}")
    parts = [p.strip() for p in rest.split(",") if p.strip()]
    if cls.__name__ == "ForbidProjectionInCap":
        if not parts:
            raise ConstraintError("ForbidProjectionInCap needs an axis index")
        return cls(int(parts[0]), *[_vertex(g, p) for p in parts[1:]])
    return cls(*[_vertex(g, p) for p in parts])


# commands ---------------------------------------------------------------------

def cmd_gadget(args):
    g = build_gadget(GadgetSpec(args.name, args.k))
    _write(args.output, serialize_graph(g))
    return EXIT_OK


def cmd_boxicity(args):
    g = parse_graph(_read(args.graph))
    res = compute_boxicity(g, args.max_d, engine=args.engine, budget=_budget(args), seed=args.seed)
    if isinstance(res, SolveOutcome):
        payload = {"boxicity": None, "status": "budget-exhausted", "stats": res.stats}
        code = EXIT_BUDGET
    elif res is None:
        payload = {"boxicity": None, "status": f"greater than {args.max_d}"}
        code = EXIT_NO
    else:
        payload = {"boxicity": res, "status": "decided"}
        code = EXIT_OK
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    elif code == EXIT_OK:
        print(res)
    elif code == EXIT_NO:
        print(f">{args.max_d}")
    else:
        print("budget exhausted", file=sys.stderr)
    return code


def cmd_decide(args):
    g = parse_graph(_read(args.graph))
    cons = [parse_constraint(g, c) for c in args.constraint]
    out = decide_box_le(g, args.d, cons, engine=args.engine, budget=_budget(args), seed=args.seed)
    if out.feasible and args.output:
        _write(args.output, out.representation.to_text())
    if args.json:
        print(json.dumps({"status": out.status.value, "stats": out.stats,
                          "representation": out.representation.to_text() if out.feasible else None},
                         sort_keys=True))
    else:
        print(out.status.value)
        if out.feasible and not args.output:
            sys.stdout.write(out.representation.to_text())
    return {"feasible": EXIT_OK, "infeasible": EXIT_NO}.get(out.status.value, EXIT_BUDGET)


def _lemma_job(job):
    lemma, budget, engine, k, samples, seed = job
    return check_lemma(lemma, budget, engine, k, samples, seed)


def cmd_verify_lemma(args):
    lemmas = list(LEMMAS) if args.lemma == "all" else [args.lemma]
    budget = Budget(seconds=args.budget) if args.budget else None
    seed = args.seed
    jobs = [(lem, budget, args.engine, args.k, args.samples, seed) for lem in lemmas]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            verdicts = list(pool.map(_lemma_job, jobs))  # keeps query order
    else:
        verdicts = [_lemma_job(j) for j in jobs]
    if args.json:
        payload = [v.to_json() for v in verdicts]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=2, sort_keys=True))
    else:
        for v in verdicts:
            print(f"{v.lemma}: {v.status} ({v.stats.get('seconds', 0):.2f}s)")
    statuses = {v.status for v in verdicts}
    if "refuted" in statuses:
        return EXIT_NO
    if "undecided" in statuses:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_verify_theorem(args):
    report = check_theorem_decomposition(args.k)
    payload = {"decomposition": report}
    code = EXIT_OK if report["all_ok"] else EXIT_NO
    if args.budget is not None:
        verdict = check_theorem_full(Budget.parse(args.budget), k=args.k, engine=args.engine,
                                     seed=args.seed, checkpoint=args.checkpoint)
        payload["full"] = verdict.to_json()
        if code == EXIT_OK:
            code = {"verified": EXIT_OK, "refuted": EXIT_NO}.get(verdict.status, EXIT_BUDGET)
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(f"G({args.k}): n={report['n']} m={report['m']}, "
              f"{report['verified']}/{len(report['embeddings'])} embeddings verified")
        if "full" in payload:
            print(f"box(G) <= 2 search: {payload['full']['verdict']}")
    return code


def cmd_export_cnf(args):
    g = parse_graph(_read(args.graph))
    cons = [parse_constraint(g, c) for c in args.constraint]
    text, _ = export_cnf(g, args.d, cons, engine=args.engine, clause_cap=args.clause_cap)
    _write(args.output, text)
    return EXIT_OK


def cmd_import_model(args):
    with open(args.cnf) as fh:
        varmap = VarMap.from_dimacs(fh.read())
    g = parse_graph(_read(args.graph)) if args.graph else None
    try:
        rep = import_model(varmap, _read(args.model), g)
    except SolverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO
    _write(args.output, rep.to_text())
    return EXIT_OK


def cmd_recognize(args):
    g = parse_graph(_read(args.graph))
    report = recognize(g)
    if args.json:
        print(json.dumps(report, sort_keys=True))
    else:
        yn = {True: "yes", False: "no", None: "undecided"}
        print(f"vertices: {report['n']}")
        print(f"edges: {report['m']}")
        print(f"series-parallel: {yn[report['series_parallel']]}")
        print(f"2-tree: {yn[report['two_tree']]}")
        print(f"m = 2n-3: {yn[report['edge_maximal_sp']]}")
        print(f"interval: {yn[report['interval']]}")
    return EXIT_OK


def cmd_render(args):
    g = parse_graph(_read(args.graph))
    if args.rep:
        rep = geo.parse_representation(_read(args.rep))
    else:
        out = decide_box_le(g, args.d, engine=args.engine, budget=_budget(args), seed=args.seed)
        if not out.feasible:
            print(f"no {args.d}-box representation: {out.status.value}", file=sys.stderr)
            return EXIT_NO if out.infeasible else EXIT_BUDGET
        rep = out.representation
    _write(args.output, render_svg(g, rep, unit=args.unit))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="boxkit", description="Exact boxicity toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def seeded(sp):
        sp.add_argument("--seed", type=int, default=None,
                        help="branching seed (default: $BOXKIT_SEED or 0)")

    sp = sub.add_parser("gadget", help="emit a gadget graph")
    sp.add_argument("name", choices=GADGETS)
    sp.add_argument("--k", type=int, default=5)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_gadget)

    sp = sub.add_parser("boxicity", help="compute boxicity up to --max-d")
    sp.add_argument("graph", nargs="?")
    sp.add_argument("--max-d", type=int, default=3)
    sp.add_argument("--engine", choices=("auto",) + ENGINES, default="auto")
    sp.add_argument("--budget", help="e.g. 60, conflicts=10000, seconds=10,memory_mb=2048")
    sp.add_argument("--json", action="store_true")
    seeded(sp)
    sp.set_defaults(func=cmd_boxicity)

    sp = sub.add_parser("decide", help="decide box(G) <= d under side constraints")
    sp.add_argument("graph", nargs="?")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--constraint", action="append", default=[],
                    help="e.g. RequireCrossing:a,b (labels or indices); repeatable")
    sp.add_argument("--engine", choices=("auto",) + ENGINES, default="auto")
    sp.add_argument("--budget")
    sp.add_argument("-o", "--output", help="write the representation here")
    sp.add_argument("--json", action="store_true")
    seeded(sp)
    sp.set_defaults(func=cmd_decide)

    sp = sub.add_parser("verify-lemma", help="machine-check a lemma")
    sp.add_argument("lemma", choices=LEMMAS + ("all",))
    sp.add_argument("--budget", type=float, help="seconds")
    sp.add_argument("--engine", choices=("endpoint",), default="endpoint")
    sp.add_argument("--k", type=int, default=5)
    sp.add_argument("--samples", type=int, default=100_000)
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--json", action="store_true")
    seeded(sp)
    sp.set_defaults(func=cmd_verify_lemma)

    sp = sub.add_parser("verify-theorem", help="check the construction of G and optionally search")
    sp.add_argument("--k", type=int, default=5)
    sp.add_argument("--budget", help="run the full box(G) <= 2 search with this budget")
    sp.add_argument("--engine", choices=("before-cegar", "endpoint"), default="before-cegar")
    sp.add_argument("--checkpoint", help="JSON file refreshed with search statistics")
    sp.add_argument("--json", action="store_true")
    seeded(sp)
    sp.set_defaults(func=cmd_verify_theorem)

    sp = sub.add_parser("export-cnf", help="write the encoding as DIMACS")
    sp.add_argument("graph", nargs="?")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--engine", choices=("endpoint", "before-cegar"), default="endpoint")
    sp.add_argument("--constraint", action="append", default=[])
    sp.add_argument("--clause-cap", type=int, default=10**8)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_export_cnf)

    sp = sub.add_parser("import-model", help="decode an external SAT model")
    sp.add_argument("--cnf", required=True, help="the exported DIMACS file")
    sp.add_argument("--model", help="model file (default stdin)")
    sp.add_argument("--graph", help="verify against this graph")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_import_model)

    sp = sub.add_parser("recognize", help="report graph-class memberships")
    sp.add_argument("graph", nargs="?")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_recognize)

    sp = sub.add_parser("render", help="draw a representation as SVG")
    sp.add_argument("graph")
    sp.add_argument("--rep", help="representation file; solved for when omitted")
    sp.add_argument("--d", type=int, default=2)
    sp.add_argument("--engine", choices=("auto",) + ENGINES, default="auto")
    sp.add_argument("--budget")
    sp.add_argument("--unit", type=int, default=40)
    sp.add_argument("-o", "--output")
    seeded(sp)
    sp.set_defaults(func=cmd_render)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "seed", None) is None and hasattr(args, "seed"):
        args.seed = default_seed()
    try:
        return args.func(args)
    except (GraphError, SolverError, ConstraintError, geo.GeometryError, ValueError) as exc:
        print(f"boxkit {args.command}: error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
