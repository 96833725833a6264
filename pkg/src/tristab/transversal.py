"""Line transversals to triples of convex bodies in E3, decided exactly.

Lines are Plucker pairs (direction, moment). The existence search walks a
finite candidate set drawn from the classical extremal classes: lines
through two vertices, lines through a vertex and two edge-support lines,
and common transversals of four edge-support lines. If a transversal set
is nonempty its boundary contains a candidate from one of these classes,
so in general position the enumeration is complete; every verdict is
nevertheless cross-checked, Found by re-verification and NotFound by a
direction-sampling oracle.

Candidates with irrational coordinates are handled in Q(sqrt(D)) rather
than by floating approximation: a stabbing verdict at a quadratic line
must be a certificate, not a guess.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .convex import ConvexBody, PatternFails, separation_pattern
from .core import (Feasible, FarkasCert, LinearSystem, QuadScalar, Vec,
                   canonical_ray, lp_solve_nonneg, quad_sqrt, sign, vec3)


@dataclass(frozen=True)
class PluckerLine:
    """Line as (direction, moment) with moment = p x direction for any
    point p on the line; the pair is determined up to a common nonzero
    scale. Coordinates are Fractions or QuadScalars."""

    direction: Vec
    moment: Vec

    def __post_init__(self):
        if self.direction.dim != 3 or self.moment.dim != 3:
            raise ValueError("Plucker lines live in E3")
        if self.direction.is_zero():
            raise ValueError("zero direction")
        if sign(self.direction.dot(self.moment)) != 0:
            raise ValueError("Plucker relation d . m = 0 violated")

    @classmethod
    def through(cls, p: Vec, q: Vec) -> "PluckerLine":
        d = q - p
        if d.is_zero():
            raise ValueError("coincident points span no line")
        return cls(d, p.cross(d))

    @classmethod
    def at_point(cls, p: Vec, direction: Vec) -> "PluckerLine":
        return cls(direction, p.cross(direction))

    def contains(self, p: Vec) -> bool:
        return p.cross(self.direction) == self.moment

    def some_point(self) -> Vec:
        """The point of the line closest to the origin."""
        return self.direction.cross(self.moment) \
            * (1 / self.direction.dot(self.direction))


def side_product(a: PluckerLine, b: PluckerLine):
    """Reciprocal product; zero exactly when the lines are coplanar."""
    return a.direction.dot(b.moment) + b.direction.dot(a.moment)


def _rational_six(line: PluckerLine):
    """Primitive integer (d | m) for a rational line, else None."""
    vals = []
    for c in tuple(line.direction) + tuple(line.moment):
        if isinstance(c, QuadScalar):
            if not c.is_rational:
                return None
            c = c.to_fraction()
        vals.append(Fraction(c))
    den = math.lcm(*(v.denominator for v in vals))
    ints = [int(v * den) for v in vals]
    g = math.gcd(*ints)
    return tuple(i // g for i in ints)


def _canonical_six(line: PluckerLine):
    """Scale- and orientation-free key for deduplication, or None."""
    six = _rational_six(line)
    if six is None:
        return None
    lead = next(c for c in six if c)
    return six if lead > 0 else tuple(-c for c in six)


# ============================================================
# Stabbing predicate
# ============================================================

@dataclass(frozen=True)
class StabProof:
    """A point lying on the line and in the hull, with the convex weights
    that exhibit hull membership."""

    point: Vec
    weights: tuple


@dataclass(frozen=True)
class Miss:
    cert: FarkasCert
    system: LinearSystem


def stab_system(line: PluckerLine, body: ConvexBody) -> LinearSystem:
    """Hull weights w >= 0 with sum 1 and (sum w_i v_i) x d = m."""
    n = len(body.vertices)
    system = LinearSystem(n)
    system.add_eq((1,) * n, 1)
    crossed = [v.cross(line.direction) for v in body.vertices]
    for k in range(3):
        system.add_eq(tuple(c.coords[k] for c in crossed),
                      line.moment.coords[k])
    return system


def verify_stab(line: PluckerLine, body: ConvexBody,
                proof: StabProof) -> bool:
    if len(proof.weights) != len(body.vertices):
        return False
    if any(sign(w) < 0 for w in proof.weights):
        return False
    if sign(sum(proof.weights) - 1) != 0:
        return False
    if body.combine(proof.weights) != proof.point:
        return False
    return line.contains(proof.point)


def line_meets_body(line: PluckerLine, body: ConvexBody) \
        -> StabProof | Miss:
    """Exact closed-hull stabbing decision.

    One LP covers every case, including lines inside the body's plane and
    degenerate hulls; touching counts as meeting. The Miss branch keeps
    the infeasible system alongside its Farkas certificate so the verdict
    can be re-audited.
    """
    system = stab_system(line, body)
    res = lp_solve_nonneg(system)
    if isinstance(res, Feasible):
        proof = StabProof(body.combine(res.witness), res.witness)
        if not verify_stab(line, body, proof):
            raise AssertionError("internal error: stab proof failed recheck")
        return proof
    return Miss(res.cert, system)


class _TriangleGate:
    """Sign-based fast rejection for one body, used inside the search.

    For a nondegenerate triangle, a line whose side products with the
    three cyclically oriented edge lines are all strictly positive or all
    strictly negative crosses the interior; strictly mixed signs exclude
    the closed triangle. (The three products sum to 2 * area * (d . n),
    so a line parallel to the plane can never show same strict signs.)
    Zeros, other vertex counts, and degenerate triangles fall back to the
    LP, reported as None.
    """

    def __init__(self, body: ConvexBody):
        self.body = body
        self.edges = None
        self.int_edges = None
        vs = body.vertices
        if len(vs) == 3 and body.dim == 3:
            d01, d12, d20 = vs[1] - vs[0], vs[2] - vs[1], vs[0] - vs[2]
            if not d01.cross(d12).is_zero():
                self.edges = tuple(
                    (d, p.cross(d))
                    for p, d in ((vs[0], d01), (vs[1], d12), (vs[2], d20)))
                ints = []
                for d, m in self.edges:
                    six = _rational_six(PluckerLine(d, m))
                    if six is None:
                        ints = None
                        break
                    ints.append(six)
                self.int_edges = ints

    def test(self, line: PluckerLine, six) -> bool | None:
        if self.edges is None:
            return None
        if six is not None and self.int_edges is not None:
            pos = neg = 0
            for e in self.int_edges:
                s = (six[0] * e[3] + six[1] * e[4] + six[2] * e[5]
                     + e[0] * six[3] + e[1] * six[4] + e[2] * six[5])
                if s > 0:
                    pos += 1
                elif s < 0:
                    neg += 1
                else:
                    return None
        else:
            pos = neg = 0
            for d, m in self.edges:
                s = sign(line.direction.dot(m) + d.dot(line.moment))
                if s > 0:
                    pos += 1
                elif s < 0:
                    neg += 1
                else:
                    return None
        return pos == 3 or neg == 3


# ============================================================
# Four-line pencils
# ============================================================

@dataclass(frozen=True)
class DegeneratePencil:
    reason: str


def _nullspace_basis(rows):
    """Basis of the nullspace of a small Fraction matrix (list of rows)."""
    mat = [list(r) for r in rows]
    ncols = len(mat[0])
    piv_cols = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(mat)) if mat[i][c] != 0), -1)
        if p < 0:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        inv = mat[r][c]
        mat[r] = [x / inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        piv_cols.append(c)
        r += 1
        if r == len(mat):
            break
    basis = []
    free = [c for c in range(ncols) if c not in piv_cols]
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for rr, pc in enumerate(piv_cols):
            vec[pc] = -mat[rr][fc]
        basis.append(vec)
    return basis


def common_transversals_4lines(lines: Sequence[PluckerLine]) \
        -> tuple | DegeneratePencil:
    """Lines meeting four given rational lines: zero, one, or two of them.

    Incidence with each input line is one linear condition on Plucker
    space; four independent conditions leave a 2-dimensional pencil, and
    cutting it with the quadric d . m = 0 gives a binary quadratic whose
    roots are the transversals, rational or conjugate in Q(sqrt(D)).
    Solutions with zero direction (lines at infinity) are discarded.
    """
    if len(lines) != 4:
        raise ValueError("exactly four lines required")
    rows = []
    for ln in lines:
        six = _rational_six(ln)
        if six is None:
            raise ValueError("pencil solving needs rational input lines")
        rows.append([Fraction(c) for c in six[3:] + six[:3]])
    basis = _nullspace_basis(rows)
    if len(basis) != 2:
        return DegeneratePencil(
            f"incidence system leaves a {len(basis)}-dimensional space")
    x1, x2 = basis

    def quad(u, v):
        total = Fraction(0)
        for k in range(3):
            total += u[k] * v[k + 3] + v[k] * u[k + 3]
        return total

    a, c = quad(x1, x1) / 2, quad(x2, x2) / 2
    b = quad(x1, x2) / 2
    if a == 0 and b == 0 and c == 0:
        return DegeneratePencil("quadric vanishes on the whole pencil")

    roots = []
    if a != 0:
        disc = b * b - a * c
        s = sign(disc)
        if s == 0:
            roots.append((-b / a, Fraction(1)))
        elif s > 0:
            root = quad_sqrt(disc)
            roots.append(((-b + root) / a, Fraction(1)))
            roots.append(((-b - root) / a, Fraction(1)))
    else:
        roots.append((Fraction(1), Fraction(0)))
        if b != 0:
            roots.append((-c / (2 * b), Fraction(1)))

    out = []
    for al, be in roots:
        if isinstance(al, QuadScalar) and al.is_rational:
            al = al.to_fraction()
        coords = [al * x1[k] + be * x2[k] for k in range(6)]
        direction = Vec(coords[:3])
        if direction.is_zero():
            continue
        out.append(PluckerLine(direction, Vec(coords[3:])))
    return tuple(out)


# ============================================================
# Transversal search
# ============================================================

@dataclass(frozen=True)
class TransversalCert:
    """A line and, per body, a stabbed point with its hull weights."""

    line: PluckerLine
    proofs: tuple


def verify_transversal_cert(bodies: Sequence[ConvexBody],
                            cert: TransversalCert) -> bool:
    if len(cert.proofs) != len(bodies):
        return False
    return all(verify_stab(cert.line, body, proof)
               for body, proof in zip(bodies, cert.proofs))


@dataclass(frozen=True)
class SearchReport:
    candidates_examined: int
    degenerate_skipped: int
    oracle_samples: int
    verdict: str


@dataclass(frozen=True)
class Found:
    cert: TransversalCert
    report: SearchReport


@dataclass(frozen=True)
class NotFound:
    report: SearchReport


@dataclass(frozen=True)
class NoneSampled:
    sampled: int


def _certify(line: PluckerLine, bodies) -> TransversalCert:
    proofs = []
    for body in bodies:
        res = line_meets_body(line, body)
        if not isinstance(res, StabProof):
            raise AssertionError("internal error: candidate stopped stabbing")
        proofs.append(res)
    cert = TransversalCert(line, tuple(proofs))
    if not verify_transversal_cert(bodies, cert):
        raise AssertionError("internal error: transversal cert invalid")
    return cert


def _unit_weights(body: ConvexBody, index: int) -> tuple:
    return tuple(Fraction(1 if k == index else 0)
                 for k in range(len(body.vertices)))


def _any_other_point(bodies, x: Vec) -> Vec:
    for body in bodies:
        for v in body.vertices:
            if v != x:
                return v
    return x + vec3(1, 0, 0)


def transversal_from_pierce(bodies: Sequence[ConvexBody],
                            fails: PatternFails) -> TransversalCert:
    """Constructive transversal from a failed separation pattern.

    The common point x lies in body i and in the hull of the other two;
    splitting its hull weights by body gives points y_j, y_k of the two
    bodies with x on the segment between them (or x inside one of them
    outright), so a single line picks up all three bodies.
    """
    i = fails.index
    j, k = (idx for idx in range(3) if idx != i)
    x = fails.common.point
    nj = len(bodies[j].vertices)
    wj = fails.common.weights_second[:nj]
    wk = fails.common.weights_second[nj:]
    mass_j, mass_k = sum(wj), sum(wk)
    proofs: dict[int, StabProof] = {i: StabProof(x, fails.common.weights_first)}

    if sign(mass_j) > 0 and sign(mass_k) > 0:
        uj = tuple(w / mass_j for w in wj)
        uk = tuple(w / mass_k for w in wk)
        yj, yk = bodies[j].combine(uj), bodies[k].combine(uk)
        if yj != yk:
            line = PluckerLine.through(yj, yk)
        else:
            line = PluckerLine.at_point(x, _any_other_point(bodies, x) - x)
        proofs[j] = StabProof(yj, uj)
        proofs[k] = StabProof(yk, uk)
    else:
        # all hull mass sits in one body, so x lies in two bodies at once
        inside, spare = (j, k) if sign(mass_j) > 0 else (k, j)
        u = tuple(w / (mass_j + mass_k)
                  for w in (wj if inside == j else wk))
        q = next((v for v in bodies[spare].vertices if v != x), None)
        if q is None:
            line = PluckerLine.at_point(x, _any_other_point(bodies, x) - x)
            q = bodies[spare].vertices[0]
        else:
            line = PluckerLine.through(x, q)
        proofs[inside] = StabProof(x, u)
        proofs[spare] = StabProof(
            q, _unit_weights(bodies[spare],
                             bodies[spare].vertices.index(q)))

    cert = TransversalCert(line, tuple(proofs[n] for n in range(3)))
    if not verify_transversal_cert(bodies, cert):
        raise AssertionError("internal error: pierce transversal invalid")
    return cert


def _edge_lines(bodies):
    edges = []
    for body in bodies:
        vs = body.vertices
        for a, b in combinations(range(len(vs)), 2):
            if vs[a] != vs[b]:
                edges.append(PluckerLine.through(vs[a], vs[b]))
    return edges


def _candidate_lines(bodies, counts):
    """Yield extremal candidates in canonical order, deduplicated.

    counts is a dict accumulating 'degenerate' skips (vertex pairs that
    coincide, vertex-on-edge planes, parallel support planes, degenerate
    pencils); rational duplicates are silently merged.
    """
    seen = set()

    def emit(line):
        key = _canonical_six(line)
        if key is not None:
            if key in seen:
                return None
            seen.add(key)
        return line

    verts = [v for body in bodies for v in body.vertices]
    for a, b in combinations(range(len(verts)), 2):
        if verts[a] == verts[b]:
            counts["degenerate"] += 1
            continue
        line = emit(PluckerLine.through(verts[a], verts[b]))
        if line is not None:
            yield line

    edges = _edge_lines(bodies)
    for v in verts:
        planes = []
        for e in edges:
            n = e.moment - v.cross(e.direction)
            planes.append(None if n.is_zero() else n)
        for a, b in combinations(range(len(edges)), 2):
            na, nb = planes[a], planes[b]
            if na is None or nb is None:
                counts["degenerate"] += 1
                continue
            direction = na.cross(nb)
            if direction.is_zero():
                counts["degenerate"] += 1
                continue
            line = emit(PluckerLine.at_point(v, direction))
            if line is not None:
                yield line

    for subset in combinations(edges, 4):
        res = common_transversals_4lines(subset)
        if isinstance(res, DegeneratePencil):
            counts["degenerate"] += 1
            continue
        for ln in res:
            line = emit(ln)
            if line is not None:
                yield line


def _enumerate_transversal(bodies, counts):
    """First transversal among the extremal candidates, with LP-backed
    certificate, or None; returns (cert_or_none, candidates_examined)."""
    gates = [_TriangleGate(body) for body in bodies]
    examined = 0
    for line in _candidate_lines(bodies, counts):
        examined += 1
        six = _rational_six(line)
        hit = True
        for gate, body in zip(gates, bodies):
            quick = gate.test(line, six)
            if quick is None:
                quick = isinstance(line_meets_body(line, body), StabProof)
            if not quick:
                hit = False
                break
        if hit:
            return _certify(line, bodies), examined
    return None, examined


def find_line_transversal(bodies: Sequence[ConvexBody], pattern=None,
                          oracle_samples: int = 2048) -> Found | NotFound:
    """Search for a line meeting all three bodies.

    A failed separation pattern short-circuits into a constructive
    transversal; since the middle of three collinear stab points always
    lies in the hull of the other two bodies, a transversal in fact
    forces such a failure, making this the discovery path. The extremal
    candidate classes and the direction oracle still run on the remaining
    inputs as an independent route: NotFound is only reported once the
    enumeration is exhausted and a fresh sample of oracle_samples
    directions also comes up empty. If either late route does find a
    line, its certificate wins over a wrong NotFound.
    """
    bodies = tuple(bodies)
    if len(bodies) != 3:
        raise ValueError("exactly three bodies required")
    if any(body.dim != 3 for body in bodies):
        raise ValueError("bodies must live in E3")

    if pattern is None:
        pattern = separation_pattern(bodies)
    if isinstance(pattern, PatternFails):
        cert = transversal_from_pierce(bodies, pattern)
        return Found(cert, SearchReport(0, 0, 0, "found"))

    counts = {"degenerate": 0}
    cert, examined = _enumerate_transversal(bodies, counts)
    if cert is not None:
        return Found(cert, SearchReport(examined, counts["degenerate"],
                                        0, "found"))

    res = direction_oracle(bodies, fibonacci_directions(oracle_samples))
    if isinstance(res, Found):
        # falsifies the completeness of the candidate classes; surface the
        # line rather than a wrong NotFound
        return Found(res.cert,
                     SearchReport(examined, counts["degenerate"],
                                  res.report.oracle_samples, "found"))
    return NotFound(SearchReport(examined, counts["degenerate"],
                                 res.sampled, "not_found"))


# ============================================================
# Direction-sampling oracle
# ============================================================

def fibonacci_directions(n: int, scale: int = 10_000):
    """About n rational directions spread over the upper hemisphere.

    Line directions are sign-free, so half the sphere suffices; spherical
    Fibonacci points rounded to integer coordinates at the given scale
    give a deterministic low-discrepancy rational sample.
    """
    if n <= 0:
        raise ValueError("need a positive sample count")
    golden = (1 + math.sqrt(5)) / 2
    out, seen = [], set()
    for i in range(n):
        z = (i + 0.5) / n
        r = math.sqrt(max(0.0, 1 - z * z))
        theta = 2 * math.pi * i / golden
        ints = (round(r * math.cos(theta) * scale),
                round(r * math.sin(theta) * scale), round(z * scale))
        if not any(ints):
            continue
        ray = canonical_ray(Vec(ints))
        if ray.ints not in seen:
            seen.add(ray.ints)
            out.append(ray.as_vec())
    return out


def refined_directions(center: Vec, n: int = 441, denom: int = 64):
    """A grid of about n rational directions clustered around center,
    center itself included (as a ray)."""
    six = [Fraction(c) for c in center]
    den = math.lcm(*(f.denominator for f in six))
    base = Vec([int(f * den) for f in six])
    if base.is_zero():
        raise ValueError("zero center direction")
    u = base.cross(vec3(1, 0, 0))
    if u.is_zero():
        u = base.cross(vec3(0, 1, 0))
    v = base.cross(u)
    k = max(1, int(math.isqrt(n)) // 2)
    out, seen = [], set()
    for a in range(-k, k + 1):
        for b in range(-k, k + 1):
            d = base * (denom * k) + u * a + v * b
            if d.is_zero():
                continue
            ray = canonical_ray(d)
            if ray.ints not in seen:
                seen.add(ray.ints)
                out.append(ray.as_vec())
    return out


def _shadow_prefilter(bodies, directions):
    """Float screen over the shadows of the bodies along each direction.

    Returns (alive, shadows): alive marks directions whose shadows are
    not clearly pairwise separated (separating-axis test over every
    vertex-difference axis, vectorized over the whole sample), shadows
    holds the projected vertex coordinates for the second-stage check.

    Purely advisory: it only ever skips work, never produces a Found, so
    float error cannot corrupt a verdict (a sufficiently wrong skip can
    at worst turn a Found into NoneSampled, which is not a proof).
    """
    D = np.array([[float(c) for c in d] for d in directions], dtype=float)
    e1 = np.array([1.0, 0.0, 0.0])
    e2 = np.array([0.0, 1.0, 0.0])
    u = np.cross(D, e1)
    small = (u * u).sum(axis=1) < 1e-18
    if small.any():
        u[small] = np.cross(D[small], e2)
    v = np.cross(D, u)
    shadows = []
    for body in bodies:
        P = np.array([[float(c) for c in vert] for vert in body.vertices])
        # (K, n_i, 2) projected onto the plane orthogonal to each direction
        shadows.append(np.stack((P @ u.T, P @ v.T), axis=2).transpose(1, 0, 2))
    alive = np.ones(len(directions), dtype=bool)
    for i in range(3):
        for j in range(i + 1, 3):
            A, B = shadows[i], shadows[j]
            for S in (A, B):
                n = S.shape[1]
                for a in range(n):
                    for b in range(a + 1, n):
                        edge = S[:, b, :] - S[:, a, :]
                        axis = np.stack((-edge[:, 1], edge[:, 0]), axis=1)
                        pa = np.einsum("knc,kc->kn", A, axis)
                        pb = np.einsum("knc,kc->kn", B, axis)
                        scale = np.maximum(np.abs(pa).max(axis=1),
                                           np.abs(pb).max(axis=1))
                        eps = 1e-7 * (scale + 1.0)
                        gap = np.maximum(pa.min(axis=1) - pb.max(axis=1),
                                         pb.min(axis=1) - pa.max(axis=1))
                        alive &= ~(gap > eps)
    return alive, shadows


def _inside_hull2(point, pts, eps):
    """Float membership of a 2D point in the hull of a tiny point set, by
    Caratheodory: inside some triangle of the set. Near-boundary verdicts
    count as inside, keeping the screen conservative."""
    n = len(pts)
    if n == 1:
        return abs(point[0] - pts[0][0]) + abs(point[1] - pts[0][1]) <= eps
    idx = range(n)
    for a in idx:
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                d1 = _cross2(pts[a], pts[b], point)
                d2 = _cross2(pts[b], pts[c], point)
                d3 = _cross2(pts[c], pts[a], point)
                if (d1 >= -eps and d2 >= -eps and d3 >= -eps) or \
                        (d1 <= eps and d2 <= eps and d3 <= eps):
                    return True
    if n == 2:
        d = _cross2(pts[0], pts[1], point)
        if abs(d) <= eps:
            t = ((point[0] - pts[0][0]) * (pts[1][0] - pts[0][0])
                 + (point[1] - pts[0][1]) * (pts[1][1] - pts[0][1]))
            l2 = ((pts[1][0] - pts[0][0]) ** 2
                  + (pts[1][1] - pts[0][1]) ** 2)
            return -eps <= t <= l2 + eps
    return False


def _cross2(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _triple_overlap_float(polys):
    """Whether three projected point sets plausibly share a common point.

    If the triple intersection of the hulls is nonempty, some witness is
    a vertex of one hull inside the other two or a crossing of two hull
    edges inside the third; all such candidates are enumerable. Errs
    toward True so the exact LP gets the final word.
    """
    scale = max(max(abs(x), abs(y)) for p in polys for x, y in p) + 1.0
    eps = 1e-7 * scale
    for s in range(3):
        o1, o2 = polys[(s + 1) % 3], polys[(s + 2) % 3]
        for pt in polys[s]:
            if _inside_hull2(pt, o1, eps) and _inside_hull2(pt, o2, eps):
                return True
    for s in range(3):
        A, B, C = polys[s], polys[(s + 1) % 3], polys[(s + 2) % 3]
        segs_a = [(A[i], A[j]) for i in range(len(A))
                  for j in range(i + 1, len(A))]
        segs_b = [(B[i], B[j]) for i in range(len(B))
                  for j in range(i + 1, len(B))]
        for p1, p2 in segs_a:
            for q1, q2 in segs_b:
                d1 = _cross2(q1, q2, p1)
                d2 = _cross2(q1, q2, p2)
                d3 = _cross2(p1, p2, q1)
                d4 = _cross2(p1, p2, q2)
                if abs(d1 - d2) <= eps * eps or abs(d3 - d4) <= eps * eps:
                    continue
                t = d1 / (d1 - d2)
                if not (-1e-7 <= t <= 1 + 1e-7):
                    continue
                s2 = d3 / (d3 - d4)
                if not (-1e-7 <= s2 <= 1 + 1e-7):
                    continue
                x = (p1[0] + t * (p2[0] - p1[0]),
                     p1[1] + t * (p2[1] - p1[1]))
                if _inside_hull2(x, C, eps):
                    return True
    return False


def _axial_system(bodies, direction: Vec) -> LinearSystem:
    sizes = [len(body.vertices) for body in bodies]
    n = sum(sizes) + 4
    off = [0, sizes[0], sizes[0] + sizes[1]]
    t_cols = [(sum(sizes), sum(sizes) + 1), (sum(sizes) + 2, sum(sizes) + 3)]
    system = LinearSystem(n)
    for b, size in enumerate(sizes):
        row = [0] * n
        for idx in range(size):
            row[off[b] + idx] = 1
        system.add_eq(row, 1)
    for b in (1, 2):
        pos, neg = t_cols[b - 1]
        for k in range(3):
            row = [Fraction(0)] * n
            for idx, vert in enumerate(bodies[b].vertices):
                row[off[b] + idx] = vert.coords[k]
            for idx, vert in enumerate(bodies[0].vertices):
                row[idx] = -vert.coords[k]
            row[pos] = -direction.coords[k]
            row[neg] = direction.coords[k]
            system.add_eq(row, 0)
    return system


def direction_oracle(bodies: Sequence[ConvexBody],
                     directions: Iterable[Vec]) -> Found | NoneSampled:
    """Semidecision by direction sampling.

    A line with direction delta meets all bodies iff one point of each
    body can be aligned along delta, an LP in the hull weights. Found
    certificates come out of exact rational LPs; NoneSampled only means
    the sample was exhausted, never that no transversal exists.
    """
    bodies = tuple(bodies)
    if len(bodies) != 3:
        raise ValueError("exactly three bodies required")
    dirs = list(directions)
    if not dirs:
        raise ValueError("empty direction sample")
    alive, shadows = _shadow_prefilter(bodies, dirs)
    sizes = [len(body.vertices) for body in bodies]
    off = [0, sizes[0], sizes[0] + sizes[1]]
    for processed, (direction, keep) in enumerate(zip(dirs, alive), 1):
        if not keep:
            continue
        polys = [tuple(map(tuple, shadows[b][processed - 1]))
                 for b in range(3)]
        if not _triple_overlap_float(polys):
            continue
        res = lp_solve_nonneg(_axial_system(bodies, direction))
        if not isinstance(res, Feasible):
            continue
        w = res.witness
        weights = [tuple(w[off[b]:off[b] + sizes[b]]) for b in range(3)]
        points = [bodies[b].combine(weights[b]) for b in range(3)]
        line = PluckerLine.at_point(points[0], direction)
        cert = TransversalCert(line, tuple(
            StabProof(points[b], weights[b]) for b in range(3)))
        if not verify_transversal_cert(bodies, cert):
            raise AssertionError("internal error: sampled cert invalid")
        return Found(cert, SearchReport(0, 0, processed, "found"))
    return NoneSampled(len(dirs))
