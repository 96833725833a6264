"""Positive spans and the spherical picture: exact cone intersection with
two-sided certificates, geodesic drawings of the 3+3 incidence graph, and
the crossing search those drawings force.

A ray stands for a point of the unit sphere without leaving integer
arithmetic, and the minor arc between two non-antipodal rays is exactly the
set of rays in their strictly positive span. "Do these arcs cross" is
therefore a four-variable linear program, answered with a common ray or a
Farkas certificate that no common ray exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .convex import SeparationCert
from .core import (FarkasCert, Infeasible, LinearSystem, Ray, Vec,
                   canonical_ray, lp_maximize, sign)


@dataclass(frozen=True)
class Cone:
    """Strictly positive span of finitely many rays.

    The span is {sum c_g * g : all c_g > 0}; with a single generator that is
    the ray itself, and generators may be redundant or even antipodal, in
    which case the span contains the zero vector.
    """

    generators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise ValueError("a cone needs at least one generator")
        for g in gens:
            if not isinstance(g, Ray):
                raise TypeError("cone generators must be rays")
        if len({g.dim for g in gens}) != 1:
            raise ValueError("mixed-dimension generators")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, *points) -> "Cone":
        """Convenience constructor quotienting vectors to rays."""
        rays = []
        for p in points:
            if isinstance(p, Ray):
                rays.append(p)
            else:
                rays.append(canonical_ray(p if isinstance(p, Vec) else Vec(p)))
        return cls(tuple(rays))

    @property
    def dim(self) -> int:
        return self.generators[0].dim


@dataclass(frozen=True)
class ConeWitness:
    """Strictly positive coefficients with equal combinations on both sides.

    eta is the common ray, i.e. the positive-scaling class of the equal
    combination. eta is None only in the corner case where the spans share
    nothing but the zero vector (possible when a cone contains antipodal
    generators); then the equal combination itself is zero.
    """

    eta: Ray | None
    lam: tuple
    mu: tuple


@dataclass(frozen=True)
class Intersects:
    witness: ConeWitness


@dataclass(frozen=True)
class Disjoint:
    cert: FarkasCert


def intersection_system(V: Cone, U: Cone) -> LinearSystem:
    """LP whose feasibility decides pos(V) meets pos(U).

    Variables are the coefficients (lam, mu); rows force the combinations
    equal coordinatewise and every coefficient >= 1. Positive homogeneity
    makes ">= 1" interchangeable with "> 0", and keeps the system closed so
    Farkas certificates exist for the disjoint case.
    """
    if V.dim != U.dim:
        raise ValueError("cones live in different dimensions")
    r, s = len(V.generators), len(U.generators)
    system = LinearSystem(r + s)
    for k in range(V.dim):
        coeffs = ([g.ints[k] for g in V.generators]
                  + [-g.ints[k] for g in U.generators])
        system.add_eq(coeffs, 0)
    for j in range(r + s):
        system.add_ge(tuple(1 if i == j else 0 for i in range(r + s)), 1)
    return system


def _combination(cone: Cone, coeffs: Sequence[Fraction]) -> Vec:
    total = Vec([0] * cone.dim)
    for c, g in zip(coeffs, cone.generators):
        total = total + g.as_vec() * c
    return total


def _min_mass_point(system: LinearSystem, n: int):
    """Feasible point minimizing the coefficient sum, or Infeasible.

    The >= 1 rows bound the sum below, so the optimum exists whenever the
    system is feasible; minimizing it keeps witnesses small and makes the
    reported coefficients a deterministic function of the input cones.
    """
    res = lp_maximize(system, (-1,) * n)
    if isinstance(res, Infeasible):
        return res
    return res.witness


def cones_intersect(V: Cone, U: Cone) -> Intersects | Disjoint:
    """Decide whether the strictly positive spans share a point.

    Intersects carries coefficients and the common ray; Disjoint carries a
    Farkas certificate for intersection_system(V, U). When the only common
    point is the origin, a second round of LPs looks for a nonzero common
    value; failing that, the witness has eta None and a zero combination.
    """
    base = intersection_system(V, U)
    r, s = len(V.generators), len(U.generators)
    point = _min_mass_point(base, r + s)
    if isinstance(point, Infeasible):
        return Disjoint(point.cert)
    combo = _combination(V, point[:r])
    if combo.is_zero():
        for k in range(V.dim):
            row = ([g.ints[k] for g in V.generators]
                   + [0] * s)
            for flip in (1, -1):
                aug = intersection_system(V, U)
                aug.add_ge(tuple(flip * c for c in row), 1)
                candidate = _min_mass_point(aug, r + s)
                if not isinstance(candidate, Infeasible):
                    point = candidate
                    combo = _combination(V, point[:r])
                    break
            if not combo.is_zero():
                break
    eta = None if combo.is_zero() else canonical_ray(combo)
    witness = ConeWitness(eta, tuple(point[:r]), tuple(point[r:]))
    if not verify_cone_witness(V, U, witness):
        raise AssertionError("internal error: cone witness failed recheck")
    return Intersects(witness)


def verify_cone_witness(V: Cone, U: Cone, w: ConeWitness) -> bool:
    """Recheck a ConeWitness by substitution only."""
    if len(w.lam) != len(V.generators) or len(w.mu) != len(U.generators):
        return False
    if any(sign(c) <= 0 for c in w.lam) or any(sign(c) <= 0 for c in w.mu):
        return False
    left = _combination(V, w.lam)
    right = _combination(U, w.mu)
    if left != right:
        return False
    if w.eta is None:
        return left.is_zero()
    return not left.is_zero() and canonical_ray(left) == w.eta


def verify_cone_disjoint(V: Cone, U: Cone, d: Disjoint) -> bool:
    from .core import verify_farkas
    return verify_farkas(intersection_system(V, U), d.cert)


# ============================================================
# Geodesic drawings of the 3x3 incidence graph
# ============================================================

class DegenerateDrawing(ValueError):
    """Raised when the six rays admit no nondegenerate drawing: a repeated
    ray, or a blue/red pair that is antipodal (so the minor arc between
    them is undefined)."""


@dataclass(frozen=True)
class Arc:
    """Open minor arc from a blue ray to a red ray, labeled by the matrix
    entry (blue index, red index) it represents."""

    label: tuple
    blue: Ray
    red: Ray

    def cone(self) -> Cone:
        return Cone((self.blue, self.red))

    def shares_vertex(self, other: "Arc") -> bool:
        return self.label[0] == other.label[0] or \
            self.label[1] == other.label[1]


@dataclass(frozen=True)
class SphereDrawing:
    """Three blue and three red rays joined by the nine bipartite arcs."""

    blue: tuple
    red: tuple
    arcs: tuple


def build_drawing(blue_certs: Sequence[SeparationCert],
                  red_certs: Sequence[SeparationCert]) -> SphereDrawing:
    """Assemble the drawing whose vertices are the six separation normals.

    Raises DegenerateDrawing when two normals coincide or a blue/red pair
    is antipodal; same-color antipodal pairs are fine, since no arc joins
    them.
    """
    if len(blue_certs) != 3 or len(red_certs) != 3:
        raise ValueError("three certificates per color required")
    return drawing_from_rays([c.half.normal for c in blue_certs],
                             [c.half.normal for c in red_certs])


def drawing_from_rays(blue: Sequence[Ray],
                      red: Sequence[Ray]) -> SphereDrawing:
    """Drawing on raw rays; arcs are labeled row-major, arc (i, j) joining
    blue ray i to red ray j."""
    blue, red = tuple(blue), tuple(red)
    if len(blue) != 3 or len(red) != 3:
        raise ValueError("three rays per color required")
    rays = blue + red
    for a in range(6):
        for b in range(a + 1, 6):
            if rays[a] == rays[b]:
                raise DegenerateDrawing(f"rays {a} and {b} coincide")
    arcs = []
    for i, b in enumerate(blue):
        for j, u in enumerate(red):
            if b.antipode() == u:
                raise DegenerateDrawing(
                    f"blue {i} and red {j} are antipodal")
            arcs.append(Arc((i, j), b, u))
    return SphereDrawing(blue, red, tuple(arcs))


@dataclass(frozen=True)
class CrossingWitness:
    """Two vertex-disjoint arcs and the common ray of their spans."""

    arc1: Arc
    arc2: Arc
    witness: ConeWitness


@dataclass(frozen=True)
class NoCrossing:
    """Falsification artifact: an exhaustive scan found no crossing.

    For a nondegenerate drawing this contradicts nonplanarity of the
    underlying bipartite graph, so the value preserves everything needed to
    inspect the failure instead of raising.
    """

    drawing: SphereDrawing
    certificates: tuple


def find_crossing(d: SphereDrawing) -> CrossingWitness | NoCrossing:
    """Scan the 18 vertex-disjoint arc pairs for a crossing.

    Pairs are tried in lexicographic label order and the first crossing is
    returned, so the result is deterministic. A crossing is an interior
    common point, i.e. a common ray of the two 2-generator spans.
    """
    misses = []
    for a in range(len(d.arcs)):
        for b in range(a + 1, len(d.arcs)):
            arc1, arc2 = d.arcs[a], d.arcs[b]
            if arc1.shares_vertex(arc2):
                continue
            res = cones_intersect(arc1.cone(), arc2.cone())
            if isinstance(res, Intersects):
                return CrossingWitness(arc1, arc2, res.witness)
            misses.append((arc1.label, arc2.label, res.cert))
    return NoCrossing(d, tuple(misses))
