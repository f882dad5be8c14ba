"""Side constraints on representations.

Each constraint knows how to check itself on concrete boxes (``holds``) and
how to express itself over endpoint comparison atoms (``formula``).  Both
views are written out independently; the solver re-checks every model with
``holds``.  Axis indices are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass

from .. import geometry as geo
from .cnf import AND, NOT, OR
from .orders import L, R


class ConstraintError(ValueError):
    pass


# formula building blocks over an atom source with le(axis, tok, tok) -> literal

def _within(at, i, u, v):
    """axis-i projection of u inside that of v"""
    return AND(at.le(i, L(v), L(u)), at.le(i, R(u), R(v)))


def _overlap(at, i, u, v):
    return AND(at.le(i, L(u), R(v)), at.le(i, L(v), R(u)))


def _box_within(at, d, u, v):
    return AND(*[_within(at, i, u, v) for i in range(1, d + 1)])


def _box_overlap(at, d, u, v):
    return AND(*[_overlap(at, i, u, v) for i in range(1, d + 1)])


def _crossing(at, u, v):
    return OR(AND(_within(at, 1, u, v), _within(at, 2, v, u)),
              AND(_within(at, 1, v, u), _within(at, 2, u, v)))


def _in_union(at, i, c, a, b):
    le = at.le
    return OR(_within(at, i, c, a), _within(at, i, c, b),
              AND(_overlap(at, i, a, b),
                  OR(le(i, L(a), L(c)), le(i, L(b), L(c))),
                  OR(le(i, R(c), R(a)), le(i, R(c), R(b)))))


def _cap_within(at, i, c, a, b):
    """axis-i projection of c & a inside that of b (given c & a non-empty)"""
    le = at.le
    return AND(OR(le(i, L(b), L(c)), le(i, L(b), L(a))),
               OR(le(i, R(c), R(b)), le(i, R(a), R(b))))


def _holds_left_cap(at, i, c, a, b):
    """c's axis-i interval contains max(l(a), l(b))"""
    le = at.le
    return AND(OR(le(i, L(c), L(a)), le(i, L(c), L(b))), le(i, L(a), R(c)), le(i, L(b), R(c)))


def _holds_right_cap(at, i, c, a, b):
    """c's axis-i interval contains min(r(a), r(b))"""
    le = at.le
    return AND(le(i, L(c), R(a)), le(i, L(c), R(b)), OR(le(i, R(a), R(c)), le(i, R(b), R(c))))


@dataclass(frozen=True)
class SideConstraint:
    two_d = True

    def vertices(self) -> tuple:
        raise NotImplementedError

    def check_applicable(self, n: int, d: int) -> None:
        for v in self.vertices():
            if not 0 <= v < n:
                raise ConstraintError(f"{self}: vertex {v} not in graph")
        if self.two_d and d != 2:
            raise ConstraintError(f"{type(self).__name__} requires d=2, got d={d}")

    def holds(self, rep: geo.BoxRepresentation) -> bool:
        raise NotImplementedError

    def formula(self, at, d: int):
        raise NotImplementedError


@dataclass(frozen=True)
class RequireCrossing(SideConstraint):
    u: int
    v: int

    def vertices(self):
        return (self.u, self.v)

    def holds(self, rep):
        return geo.is_crossing_pair(rep, self.u, self.v)

    def formula(self, at, d):
        return _crossing(at, self.u, self.v)


@dataclass(frozen=True)
class ForbidCrossing(SideConstraint):
    u: int
    v: int

    def vertices(self):
        return (self.u, self.v)

    def holds(self, rep):
        return not geo.is_crossing_pair(rep, self.u, self.v)

    def formula(self, at, d):
        return NOT(_crossing(at, self.u, self.v))


@dataclass(frozen=True)
class RequireBoxInUnion(SideConstraint):
    """box(c) inside box(a) | box(b)"""

    c: int
    a: int
    b: int

    def vertices(self):
        return (self.c, self.a, self.b)

    def holds(self, rep):
        return geo.box_in_union(rep[self.c], rep[self.a], rep[self.b])

    def formula(self, at, d):
        c, a, b = self.c, self.a, self.b
        alts = [_box_within(at, d, c, a), _box_within(at, d, c, b)]
        for i, j in ((1, 2), (2, 1)):
            alts.append(AND(_within(at, i, c, a), _within(at, i, c, b), _in_union(at, j, c, a, b)))
        return OR(*alts)


@dataclass(frozen=True)
class RequireIntersectionContained(SideConstraint):
    """box(c) & box(a) inside box(b); any dimension"""

    c: int
    a: int
    b: int
    two_d = False

    def vertices(self):
        return (self.c, self.a, self.b)

    def holds(self, rep):
        return not geo.box_diff_hits(rep[self.c], rep[self.a], rep[self.b])

    def formula(self, at, d):
        c, a, b = self.c, self.a, self.b
        return OR(NOT(_box_overlap(at, d, c, a)),
                  AND(*[_cap_within(at, i, c, a, b) for i in range(1, d + 1)]))


@dataclass(frozen=True)
class ForbidProjectionInCap(SideConstraint):
    """axis-i projection of c not inside those of both a and b"""

    i: int
    c: int
    a: int
    b: int

    def vertices(self):
        return (self.c, self.a, self.b)

    def check_applicable(self, n, d):
        super().check_applicable(n, d)
        if self.i not in (1, 2):
            raise ConstraintError(f"axis index {self.i} not in {{1, 2}}")

    def holds(self, rep):
        pc = rep.projection(self.i, self.c)
        return not (pc.within(rep.projection(self.i, self.a)) and pc.within(rep.projection(self.i, self.b)))

    def formula(self, at, d):
        return NOT(AND(_within(at, self.i, self.c, self.a), _within(at, self.i, self.c, self.b)))


@dataclass(frozen=True)
class ForbidCornerMembership(SideConstraint):
    """box(c) contains no corner point of box(a) & box(b)

    Vacuous when a and b do not intersect (no corner points exist).
    """

    c: int
    a: int
    b: int

    def vertices(self):
        return (self.c, self.a, self.b)

    def holds(self, rep):
        a, b = rep[self.a], rep[self.b]
        return not (geo.boxes_intersect(a, b) and geo.contains_corner(rep[self.c], a, b))

    def formula(self, at, d):
        c, a, b = self.c, self.a, self.b
        hit = [OR(_holds_left_cap(at, i, c, a, b), _holds_right_cap(at, i, c, a, b)) for i in (1, 2)]
        return NOT(AND(_box_overlap(at, 2, a, b), *hit))


CONSTRAINT_TYPES = {cls.__name__: cls for cls in (
    RequireCrossing, ForbidCrossing, RequireBoxInUnion, RequireIntersectionContained,
    ForbidProjectionInCap, ForbidCornerMembership)}


def describe(con: SideConstraint, g=None) -> str:
    def name(v):
        return g.name_of(v) if g is not None else str(v)
    fields = []
    for k, v in con.__dict__.items():
        fields.append(str(v) if k == "i" else name(v))
    return f"{type(con).__name__}({', '.join(fields)})"
