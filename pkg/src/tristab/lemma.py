"""Disjointness of normal cones forced by a crossed membership pattern.

The pattern: two bundles of open halfspaces and two points, each point
strictly inside every halfspace of its own bundle and strictly outside
every halfspace of the other. Whenever such points exist, the positive
spans of the two bundles' normals cannot meet, and this module certifies
that conclusion with the cone machinery: a Farkas certificate when the
cones are disjoint, a preserved counterexample witness if they ever are
not. A contradiction trace makes the counterfactual executable, showing
exactly which inequality of the membership table a claimed common
direction would violate.

Everything is dimension generic (n >= 2) and exact.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass
from fractions import Fraction

from .convex import AnchoredHalfspace
from .core import Ray, Vec, sign, verify_farkas
from .sphere import (Cone, ConeWitness, Intersects, cones_intersect,
                     intersection_system, verify_cone_witness)


class PreconditionViolated(ValueError):
    """A membership slack has the wrong strict sign.

    index locates the failing entry in the instance's slack table; boundary
    contact counts as a violation, since every required sign is strict.
    """

    def __init__(self, index: int, message: str):
        super().__init__(message)
        self.index = index


class InvalidWitness(ValueError):
    """A claimed cone witness fails its own arithmetic identities."""


def _checked_slacks(first, second, names_first, names_second, a, z):
    """Validate the crossed membership pattern and return its slack table.

    Order: a against first then second, then z the same way. Required
    signs: a positive on its own bundle and negative on the other, z
    mirrored. Raises PreconditionViolated at the first wrong sign.
    """
    halves = first + second
    names = names_first + names_second
    wants = (1,) * len(first) + (-1,) * len(second)
    table = []
    for point, pname, flip in ((a, "a", 1), (z, "z", -1)):
        for h, hname, want in zip(halves, names, wants):
            table.append((h.slack(point), want * flip,
                          f"{pname} against {hname}"))
    slacks = []
    for idx, (s, want, label) in enumerate(table):
        if sign(s) != want:
            side = "inside" if want > 0 else "outside"
            raise PreconditionViolated(
                idx, f"{label}: slack {s} but the point must lie strictly "
                     f"{side} (entry {idx})")
        slacks.append(s)
    return tuple(slacks)


def _validate_pattern(first, second, a, z, what):
    if not first or not second:
        raise ValueError(f"{what} needs at least one halfspace per bundle")
    for h in first + second:
        if not isinstance(h, AnchoredHalfspace):
            raise TypeError("bundle entries must be anchored halfspaces")
    dims = {h.normal.dim for h in first + second}
    if not isinstance(a, Vec) or not isinstance(z, Vec):
        raise TypeError("a and z must be vectors")
    dims |= {a.dim, z.dim}
    if len(dims) != 1:
        raise ValueError("mixed dimensions in one instance")
    if a.dim < 2:
        raise ValueError("instances live in dimension at least 2")


@dataclass(frozen=True)
class LemmaInstance:
    """Two halfspace pairs with points witnessing the crossed pattern.

    a lies strictly inside hA and hU and strictly outside hW and hC; z the
    other way around. The constructor enforces the pattern exactly and
    raises PreconditionViolated otherwise; pass check=False only to build
    deliberately broken data for diagnosis (derive_contradiction).
    """

    hA: AnchoredHalfspace
    hU: AnchoredHalfspace
    hW: AnchoredHalfspace
    hC: AnchoredHalfspace
    a: Vec
    z: Vec
    check: InitVar[bool] = True

    def __post_init__(self, check):
        _validate_pattern((self.hA, self.hU), (self.hW, self.hC),
                          self.a, self.z, "an instance")
        if check:
            check_preconditions(self)

    @property
    def dim(self) -> int:
        return self.a.dim

    def anchor(self) -> Vec:
        """Some exact point on both of the second pair's boundary planes.

        Purely presentational: the slack table never needs it, but it lets
        a trace reader restate the table's second half as comparisons
        against a concrete point.
        """
        return anchor_point(self.hW, self.hC)

    def swapped(self) -> "LemmaInstance":
        """The same pattern with the roles of the two bundles exchanged."""
        return LemmaInstance(self.hW, self.hC, self.hA, self.hU,
                             self.z, self.a)


def check_preconditions(inst: LemmaInstance) -> tuple:
    """Slack table of the eight strict membership inequalities.

    Entries, in order: a against hA, hU, hW, hC, then z against the same
    four. Signs must come out (+, +, -, -, -, -, +, +); any other sign,
    zero included, raises PreconditionViolated naming the entry. The
    values are exact rationals, so downstream perturbation bounds can be
    stated in terms of the minimum absolute slack.
    """
    return _checked_slacks((inst.hA, inst.hU), (inst.hW, inst.hC),
                           ("hA", "hU"), ("hW", "hC"), inst.a, inst.z)


@dataclass(frozen=True)
class PencilInstance:
    """Crossed membership pattern for bundles of arbitrary sizes.

    R holds the halfspaces containing a, S those containing z; each point
    is strictly outside every halfspace of the opposite bundle. With two
    halfspaces per bundle this is exactly a LemmaInstance.
    """

    R: tuple
    S: tuple
    a: Vec
    z: Vec
    check: InitVar[bool] = True

    def __post_init__(self, check):
        object.__setattr__(self, "R", tuple(self.R))
        object.__setattr__(self, "S", tuple(self.S))
        _validate_pattern(self.R, self.S, self.a, self.z, "a pencil")
        if check:
            self.slack_table()

    @property
    def dim(self) -> int:
        return self.a.dim

    def slack_table(self) -> tuple:
        """Slacks of a against R then S, then z likewise; all strict."""
        return _checked_slacks(
            self.R, self.S,
            tuple(f"R[{i}]" for i in range(len(self.R))),
            tuple(f"S[{j}]" for j in range(len(self.S))),
            self.a, self.z)


def anchor_point(first: AnchoredHalfspace,
                 second: AnchoredHalfspace) -> Vec:
    """Exact point on both boundary hyperplanes, by least-index pivoting.

    Free coordinates are set to zero, so the answer is a deterministic
    function of the two halfspaces. Raises ValueError when the boundaries
    are parallel and distinct.
    """
    n = first.normal.dim
    rows = [[Fraction(c) for c in h.normal.ints] + [Fraction(h.offset)]
            for h in (first, second)]
    pivots = []
    lead = 0
    for col in range(n):
        row = next((r for r in range(lead, 2) if rows[r][col] != 0), None)
        if row is None:
            continue
        rows[lead], rows[row] = rows[row], rows[lead]
        scale = rows[lead][col]
        rows[lead] = [v / scale for v in rows[lead]]
        for r in range(2):
            if r != lead and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [v - factor * w for v, w in zip(rows[r], rows[lead])]
        pivots.append((lead, col))
        lead += 1
        if lead == 2:
            break
    for r in range(lead, 2):
        if rows[r][n] != 0:
            raise ValueError("boundary planes are parallel and distinct")
    coords = [Fraction(0)] * n
    for row, col in pivots:
        coords[col] = rows[row][n]
    return Vec(coords)


# ============================================================
# Cone disjointness, certified both ways
# ============================================================


@dataclass(frozen=True)
class ConeDisjoint:
    """Positive verdict: the two normal cones share no point.

    cert is a Farkas certificate for the cones' intersection system;
    certificate_verifies rechecks it against the instance from scratch.
    """

    cert: object


@dataclass(frozen=True)
class LemmaFalsified:
    """The normal cones intersect after all.

    This outcome contradicts what the membership pattern guarantees, so it
    is preserved as a first-class artifact rather than raised and lost:
    the witness is the most important thing such a run could produce.
    """

    witness: ConeWitness


def lemma_cones(inst: LemmaInstance) -> tuple:
    """Positive spans of the two normal pairs, in bundle order."""
    return (Cone((inst.hA.normal, inst.hU.normal)),
            Cone((inst.hW.normal, inst.hC.normal)))


def pencil_cones(inst: PencilInstance) -> tuple:
    return (Cone(tuple(h.normal for h in inst.R)),
            Cone(tuple(h.normal for h in inst.S)))


def _cone_verdict(V: Cone, U: Cone):
    res = cones_intersect(V, U)
    if isinstance(res, Intersects):
        return LemmaFalsified(res.witness)
    return ConeDisjoint(res.cert)


def verify_basic_lemma(inst: LemmaInstance) -> ConeDisjoint | LemmaFalsified:
    """Certify that the instance's two normal cones are disjoint."""
    return _cone_verdict(*lemma_cones(inst))


def verify_pencil_lemma(inst: PencilInstance) -> ConeDisjoint | LemmaFalsified:
    """Certify cone disjointness for bundles of any size.

    With two halfspaces per bundle the cones, the intersection system and
    hence the certificate coincide with verify_basic_lemma's on the same
    data.
    """
    return _cone_verdict(*pencil_cones(inst))


def certificate_verifies(inst: LemmaInstance | PencilInstance,
                         verdict: ConeDisjoint) -> bool:
    """Recheck a disjointness certificate by substitution only."""
    cones = pencil_cones(inst) if isinstance(inst, PencilInstance) \
        else lemma_cones(inst)
    return verify_farkas(intersection_system(*cones), verdict.cert)


# ============================================================
# The contradiction, step by step
# ============================================================


@dataclass(frozen=True)
class TraceStep:
    inequality: str
    lhs: Fraction
    rhs: Fraction
    verdict: bool


@dataclass(frozen=True)
class ContradictionTrace:
    """Exact evaluation of the two chains a common direction must satisfy.

    The chains are 0 < eta*a < eta*p and 0 > eta*z > eta*p, where p is any
    point on both boundaries of the second bundle. Together they pin eta*p
    strictly above and strictly below zero, which exact arithmetic cannot
    deliver, so at least one step always fails; on data violating some
    precondition, the failing step names the broken inequality pair.
    """

    eta: Ray | None
    steps: tuple

    def failing(self) -> tuple:
        return tuple(s for s in self.steps if not s.verdict)


def derive_contradiction(inst: LemmaInstance,
                         w: ConeWitness) -> ContradictionTrace:
    """Evaluate the impossibility chains for a claimed common direction.

    w must be arithmetically genuine: positive coefficients lam over
    (hA, hU) and mu over (hW, hC) whose combinations agree; anything else
    raises InvalidWitness. The chain values are reported with lam's
    combination of the first pair's offsets subtracted, which translates
    the picture so the first two boundaries pass through a common zero
    level; the second pair's threshold then equals eta*p, no matter which
    boundary point p one picks. Each step is a positive combination of two
    slack-table entries, so a wrong sign in the table surfaces as a failed
    step here and nowhere else.
    """
    V, U = lemma_cones(inst)
    if not verify_cone_witness(V, U, w):
        raise InvalidWitness(
            "coefficients do not form a common positive combination")
    first = (inst.hA, inst.hU)
    second = (inst.hW, inst.hC)
    eta = Vec([0] * inst.dim)
    for c, h in zip(w.lam, first):
        eta = eta + h.normal.as_vec() * c
    tau1 = sum(c * h.offset for c, h in zip(w.lam, first))
    tau2 = sum(c * h.offset for c, h in zip(w.mu, second))
    ea = eta.dot(inst.a) - tau1
    ez = eta.dot(inst.z) - tau1
    ep = tau2 - tau1
    zero = Fraction(0)
    steps = (
        TraceStep("0 < eta*a", zero, ea, sign(ea) > 0),
        TraceStep("eta*a < eta*p", ea, ep, sign(ep - ea) > 0),
        TraceStep("0 > eta*z", zero, ez, sign(ez) < 0),
        TraceStep("eta*z > eta*p", ez, ep, sign(ez - ep) > 0),
    )
    return ContradictionTrace(w.eta, steps)
