"""Exact decision procedures for box representations."""

from .brute import brute_decide
from .constraints import (ForbidCornerMembership, ForbidCrossing, ForbidProjectionInCap,
                          RequireBoxInUnion, RequireCrossing, RequireIntersectionContained,
                          SideConstraint)
from .core import (ENGINES, Budget, SolveOutcome, SolverError, Status, UnsoundModel, VarMap,
                   compute_boxicity, decide_box_le, export_cnf, import_model, parse_model)
from .orders import EndpointOrder, orders_of, realize
from .sat import Solver

__all__ = [
    "brute_decide", "ForbidCornerMembership", "ForbidCrossing", "ForbidProjectionInCap",
    "RequireBoxInUnion", "RequireCrossing", "RequireIntersectionContained", "SideConstraint",
    "ENGINES", "Budget", "SolveOutcome", "SolverError", "Status", "UnsoundModel", "VarMap",
    "compute_boxicity", "decide_box_le", "export_cnf", "import_model", "parse_model",
    "EndpointOrder", "orders_of", "realize", "Solver",
]
