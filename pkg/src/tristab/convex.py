"""V-represented convex bodies with exact intersection and separation.

Every decision is an exact LP over convex-combination weights, and every
answer carries its own proof: common points come with the weights that
reproduce them, separations with per-vertex slacks that a reader can check
by substitution. Separating planes are max-margin optima, so they are
canonical for the input rather than artifacts of pivot order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import (FarkasCert, Feasible, LinearSystem, Optimal, QuadScalar,
                   Ray, Vec,
                   canonical_ray, lp_maximize, lp_solve_nonneg, sign)


class ConvexBody:
    """Convex hull of a finite vertex list (duplicates permitted)."""

    __slots__ = ("vertices",)

    def __init__(self, vertices: Iterable[Vec]):
        vertices = tuple(vertices)
        if not vertices:
            raise ValueError("a convex body needs at least one vertex")
        dims = {v.dim for v in vertices}
        if len(dims) != 1:
            raise ValueError("mixed vertex dimensions")
        self.vertices = vertices

    @property
    def dim(self) -> int:
        return self.vertices[0].dim

    def translate(self, shift: Vec) -> "ConvexBody":
        return type(self)(v + shift for v in self.vertices)

    def combine(self, weights: Sequence[Fraction]) -> Vec:
        if len(weights) != len(self.vertices):
            raise ValueError("weight arity mismatch")
        total = self.vertices[0] * weights[0]
        for v, w in zip(self.vertices[1:], weights[1:]):
            total = total + v * w
        return total

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, ConvexBody):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"{type(self).__name__}({list(self.vertices)!r})"


class Triangle(ConvexBody):
    """A three-vertex body; degenerate (collinear) triangles are legal and
    detectable."""

    def __init__(self, p0: Vec, p1: Vec, p2: Vec):
        super().__init__((p0, p1, p2))

    @property
    def p0(self) -> Vec:
        return self.vertices[0]

    @property
    def p1(self) -> Vec:
        return self.vertices[1]

    @property
    def p2(self) -> Vec:
        return self.vertices[2]

    def translate(self, shift: Vec) -> "Triangle":
        return Triangle(*(v + shift for v in self.vertices))

    def is_degenerate(self) -> bool:
        u, w = self.p1 - self.p0, self.p2 - self.p0
        return u.cross(w).is_zero()


def merge_bodies(*bodies: ConvexBody) -> ConvexBody:
    """Hull of a union, in V-representation simply the concatenation."""
    verts: list[Vec] = []
    for b in bodies:
        verts.extend(b.vertices)
    return ConvexBody(verts)


@dataclass(frozen=True)
class AnchoredHalfspace:
    """Open halfspace {x : normal . x > offset} with a primitive normal."""

    normal: Ray
    offset: Fraction

    def contains(self, x: Vec) -> bool:
        return sign(self.slack(x)) > 0

    def slack(self, x: Vec):
        return self.normal.dot(x) - self.offset


def halfspace(normal, offset) -> AnchoredHalfspace:
    """Open halfspace {x : normal . x > offset} from raw rational data.

    The normal is quotiented to its primitive ray and the offset divided by
    the same positive factor, so scaled copies of one inequality build equal
    objects.
    """
    vec = normal if isinstance(normal, Vec) else Vec(normal)
    ray = canonical_ray(vec)
    k = next(i for i, c in enumerate(ray.ints) if c)
    lead = vec.coords[k]
    if isinstance(lead, QuadScalar):
        lead = lead.to_fraction()
    return AnchoredHalfspace(ray, Fraction(offset) * ray.ints[k] / lead)


@dataclass(frozen=True)
class CommonPoint:
    point: Vec
    weights_first: tuple
    weights_second: tuple

    def verify(self, first: ConvexBody, second: ConvexBody) -> bool:
        for weights, body in ((self.weights_first, first),
                              (self.weights_second, second)):
            if len(weights) != len(body.vertices):
                return False
            if any(sign(w) < 0 for w in weights):
                return False
            if sum(weights) != 1:
                return False
            if body.combine(weights) != self.point:
                return False
        return True


@dataclass(frozen=True)
class Disjoint:
    """Negative intersection verdict, backed by LP infeasibility."""

    cert: FarkasCert
    system: LinearSystem


@dataclass(frozen=True)
class SeparationCert:
    """Strict separation: all of inside on the positive side of the plane,
    all of outside strictly on the negative side. Margins are the per-vertex
    slacks normal . v - offset, recorded in vertex order."""

    half: AnchoredHalfspace
    inside: ConvexBody
    outside: ConvexBody
    inside_margins: tuple
    outside_margins: tuple

    def verify(self) -> bool:
        for body, margins, want in ((self.inside, self.inside_margins, 1),
                                    (self.outside, self.outside_margins, -1)):
            if len(margins) != len(body.vertices):
                return False
            for v, m in zip(body.vertices, margins):
                if self.half.slack(v) != m or sign(m) != want:
                    return False
        return True


@dataclass(frozen=True)
class NotSeparable:
    common: CommonPoint


@dataclass(frozen=True)
class FullPattern:
    certs: tuple  # one SeparationCert per body, same order


@dataclass(frozen=True)
class PatternFails:
    index: int
    common: CommonPoint


def _common_point_system(P: ConvexBody, Q: ConvexBody) -> LinearSystem:
    dim = P.dim
    np_, nq = len(P.vertices), len(Q.vertices)
    sys = LinearSystem(np_ + nq)
    for c in range(dim):
        coeffs = [v.coords[c] for v in P.vertices]
        coeffs += [-v.coords[c] for v in Q.vertices]
        sys.add_eq(coeffs, 0)
    sys.add_eq([1] * np_ + [0] * nq, 1)
    sys.add_eq([0] * np_ + [1] * nq, 1)
    return sys


def bodies_intersect(P: ConvexBody, Q: ConvexBody) -> CommonPoint | Disjoint:
    """Exact hull intersection test.

    A common point is reported with convex weights for both bodies; a
    negative answer keeps the Farkas certificate of the weight LP.
    """
    if P.dim != Q.dim:
        raise ValueError("dimension mismatch")
    sys = _common_point_system(P, Q)
    res = lp_solve_nonneg(sys)
    if isinstance(res, Feasible):
        wp = res.witness[:len(P.vertices)]
        wq = res.witness[len(P.vertices):]
        common = CommonPoint(P.combine(wp), wp, wq)
        if not common.verify(P, Q):
            raise AssertionError("internal error: bad common-point witness")
        return common
    return Disjoint(res.cert, sys)


def separate_bodies(P: ConvexBody, Q: ConvexBody) \
        -> SeparationCert | NotSeparable:
    """Strictly separate P (inside) from Q (outside), or exhibit a common
    point showing no plane exists.

    We solve a max-margin LP in (n, t, s): push n . p >= t over P and
    n . q <= s over Q, maximizing t - s. Scale is fixed by the single row
    n . (mean P - mean Q) <= 1: every separating direction sees the
    centroid displacement positively, so the optimum is finite, and it is
    positive exactly when the hulls are disjoint. Bland's rule makes the
    optimum a deterministic function of the vertex lists. The plane is
    anchored at the midpoint of the certified slack interval, so both
    sides come out strict. A nonpositive optimum is cross-checked against
    the common-point LP, whose witness backs NotSeparable.
    """
    if P.dim != Q.dim:
        raise ValueError("dimension mismatch")
    dim = P.dim
    shift = (P.combine([Fraction(1, len(P.vertices))] * len(P.vertices))
             - Q.combine([Fraction(1, len(Q.vertices))] * len(Q.vertices)))
    margin = LinearSystem(dim + 2)
    for v in P.vertices:
        margin.add_ge(tuple(v) + (-1, 0), 0)
    for v in Q.vertices:
        margin.add_ge(tuple(-c for c in v) + (0, 1), 0)
    margin.add_le(tuple(shift) + (0, 0), 1)
    opt = lp_maximize(margin, (0,) * dim + (1, -1))
    if not isinstance(opt, Optimal):
        raise AssertionError("internal error: margin LP infeasible")
    if sign(opt.value) <= 0:
        res = bodies_intersect(P, Q)
        if not isinstance(res, CommonPoint):
            raise AssertionError(
                "internal error: zero margin yet no common point")
        return NotSeparable(res)
    normal = canonical_ray(Vec(opt.witness[:dim]))
    inside_vals = [normal.dot(v) for v in P.vertices]
    outside_vals = [normal.dot(v) for v in Q.vertices]
    lo, hi = min(inside_vals), max(outside_vals)
    if sign(lo - hi) <= 0:
        raise AssertionError("internal error: margin direction has no gap")
    offset = (lo + hi) / 2
    half = AnchoredHalfspace(normal, offset)
    cert = SeparationCert(
        half, P, Q,
        tuple(v - offset for v in inside_vals),
        tuple(v - offset for v in outside_vals),
    )
    if not cert.verify():
        raise AssertionError("internal error: separation slacks invalid")
    return cert


def separation_pattern(bodies: Sequence[ConvexBody]) \
        -> FullPattern | PatternFails:
    """For each body, separate it from the hull of the other two; stop at
    the first body for which that is impossible."""
    if len(bodies) != 3:
        raise ValueError("exactly three bodies required")
    certs = []
    for i, body in enumerate(bodies):
        others = merge_bodies(*(b for j, b in enumerate(bodies) if j != i))
        res = separate_bodies(body, others)
        if isinstance(res, NotSeparable):
            return PatternFails(i, res.common)
        certs.append(res)
    return FullPattern(tuple(certs))


# ============================================================
# 3x3 color configurations
# ============================================================

@dataclass(frozen=True)
class ColorConfig:
    """3x3 point matrix; row hulls are the blue triangles, column hulls the
    red ones, so entry (i, j) witnesses that blue i meets red j."""

    matrix: tuple
    degenerate_blue: tuple
    degenerate_red: tuple
    duplicate_points: tuple

    def point(self, i: int, j: int) -> Vec:
        return self.matrix[i][j]

    def blue(self, i: int) -> Triangle:
        return Triangle(*self.matrix[i])

    def red(self, j: int) -> Triangle:
        return Triangle(*(self.matrix[i][j] for i in range(3)))

    def blues(self) -> tuple:
        return tuple(self.blue(i) for i in range(3))

    def reds(self) -> tuple:
        return tuple(self.red(j) for j in range(3))

    @property
    def is_degenerate(self) -> bool:
        return bool(self.degenerate_blue or self.degenerate_red
                    or self.duplicate_points)


def build_config(matrix: Sequence[Sequence[Vec]]) -> ColorConfig:
    """Assemble a configuration from 9 points, flagging collinear triangles
    and coincident points rather than rejecting them."""
    rows = tuple(tuple(row) for row in matrix)
    if len(rows) != 3 or any(len(r) != 3 for r in rows):
        raise ValueError("a 3x3 matrix of points is required")
    for row in rows:
        for p in row:
            if p.dim != 3:
                raise ValueError("points must live in 3-space")

    deg_blue = tuple(i for i in range(3) if Triangle(*rows[i]).is_degenerate())
    deg_red = tuple(
        j for j in range(3)
        if Triangle(*(rows[i][j] for i in range(3))).is_degenerate())

    seen: dict[Vec, tuple[int, int]] = {}
    dupes = []
    for i in range(3):
        for j in range(3):
            p = rows[i][j]
            if p in seen:
                dupes.append((seen[p], (i, j)))
            else:
                seen[p] = (i, j)

    return ColorConfig(rows, deg_blue, deg_red, tuple(dupes))
