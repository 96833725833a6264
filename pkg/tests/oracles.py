"""Independent oracles used for dual-route verification in the test suite.

Every decision procedure in the package is checked against a second route
implemented here from scratch: Fourier-Motzkin elimination for LP verdicts,
orientation-sign arc crossing for cone intersection, exact interval stabbing
for line/tetrahedron hits, and 50-digit numeric evaluation for quadratic
signs and four-line transversal counts. None of these share algorithmic code
with the implementations they audit; they may share plain data containers.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath

from tristab.core import LinearSystem, Vec, canonical_ray, sign

# ============================================================
# Fourier-Motzkin feasibility
# ============================================================


def _int_row(coeffs, rhs):
    """Clear denominators and divide by the common gcd; returns an int tuple
    (coeffs..., rhs) or None for a vacuous 0 >= nonpositive row."""
    fracs = [Fraction(c) for c in coeffs] + [Fraction(rhs)]
    den = math.lcm(*(f.denominator for f in fracs))
    ints = [int(f * den) for f in fracs]
    if not any(ints[:-1]):
        if ints[-1] > 0:
            return "infeasible"
        return None
    g = math.gcd(*ints)
    return tuple(i // g for i in ints)


def fm_feasible(rows, n_vars: int) -> bool:
    """Decide feasibility of {coeffs . x >= rhs} rows by eliminating one
    variable at a time. Exact, complete, and independent of any solver.

    rows: iterable of (coeffs, rel, rhs) with rel in {"ge", "eq"}.
    Growth control: greedy minimum pair-product variable order, gcd-reduced
    deduplication, and Imbert's acceleration rule -- after eliminating k
    variables, any row derived from more than k+1 original rows is redundant
    and is dropped. Dropping is sound, so the decision stays exact.
    """
    work: dict = {}

    def push(coeffs, rhs, history) -> bool:
        row = _int_row(coeffs, rhs)
        if row == "infeasible":
            return False
        if row is not None:
            old = work.get(row)
            if old is None or len(history) < len(old):
                work[row] = history
        return True

    idx = 0
    for coeffs, rel, rhs in rows:
        if rel not in ("ge", "eq"):
            raise ValueError(f"unknown relation {rel!r}")
        if not push(coeffs, rhs, frozenset((idx,))):
            return False
        idx += 1
        if rel == "eq":
            if not push([-Fraction(c) for c in coeffs], -Fraction(rhs),
                        frozenset((idx,))):
                return False
            idx += 1

    remaining = list(range(n_vars))
    eliminated = 0
    while remaining:
        # cheapest variable first: fewest lower*upper combinations
        def cost(j):
            lo = sum(1 for r in work if r[j] > 0)
            up = sum(1 for r in work if r[j] < 0)
            return lo * up - lo - up

        j = min(remaining, key=cost)
        remaining.remove(j)
        eliminated += 1
        bound = eliminated + 1
        lowers = [(r, h) for r, h in work.items() if r[j] > 0]
        uppers = [(r, h) for r, h in work.items() if r[j] < 0]
        work = {r: h for r, h in work.items() if r[j] == 0}
        for lr, lh in lowers:
            for ur, uh in uppers:
                hist = lh | uh
                if len(hist) > bound:
                    continue
                lam_l, lam_u = -ur[j], lr[j]
                merged = [lam_l * a + lam_u * b for a, b in zip(lr, ur)]
                if not push(merged[:-1], merged[-1], hist):
                    return False

    return True


def fm_feasible_system(system: LinearSystem, nonneg: bool = False) -> bool:
    rows = [(r.coeffs, r.rel, r.rhs) for r in system.rows]
    if nonneg:
        for j in range(system.n_vars):
            unit = tuple(Fraction(int(k == j)) for k in range(system.n_vars))
            rows.append((unit, "ge", Fraction(0)))
    return fm_feasible(rows, system.n_vars)


# ============================================================
# Orientation-sign arc crossing
# ============================================================


def _strictly_inside_arc(x: Vec, p: Vec, q: Vec, normal: Vec) -> bool:
    # x assumed on the arc's great circle; membership in the open minor arc
    return (sign(p.cross(x).dot(normal)) > 0
            and sign(x.cross(q).dot(normal)) > 0)


def arcs_cross_oracle(v1: Vec, v2: Vec, u1: Vec, u2: Vec) -> bool:
    """Do the open minor arcs (v1,v2) and (u1,u2) share a ray?

    Distinct great circles meet in an antipodal ray pair +-w with
    w = n_v x n_u; the arcs cross exactly when one of those two rays is
    strictly interior to both. Coincident circles reduce to one-dimensional
    sector overlap. Both arcs must be nondegenerate (independent endpoints).
    """
    nv = v1.cross(v2)
    nu = u1.cross(u2)
    if nv.is_zero() or nu.is_zero():
        raise ValueError("degenerate arc")
    w = nv.cross(nu)
    if not w.is_zero():
        for cand in (w, -w):
            if (_strictly_inside_arc(cand, v1, v2, nv)
                    and _strictly_inside_arc(cand, u1, u2, nu)):
                return True
        return False
    # same great circle: overlap iff some endpoint is interior to the other
    # arc, or the two arcs coincide as unordered endpoint-ray pairs
    if (_strictly_inside_arc(u1, v1, v2, nv)
            or _strictly_inside_arc(u2, v1, v2, nv)
            or _strictly_inside_arc(v1, u1, u2, nu)
            or _strictly_inside_arc(v2, u1, u2, nu)):
        return True
    vset = {canonical_ray(v1), canonical_ray(v2)}
    uset = {canonical_ray(u1), canonical_ray(u2)}
    return vset == uset


# ============================================================
# Exact line/tetrahedron stabbing via parameter intervals
# ============================================================


def line_hits_tetra_interval(point: Vec, direction: Vec,
                             verts: list[Vec]) -> bool:
    """Exact hit test for a nondegenerate tetrahedron.

    Barycentric coordinates of point + t*direction are affine in t, so each
    nonnegativity constraint clips t to a half-line; the line meets the hull
    iff the four half-lines have a common point. Complete, LP-free.
    """
    if len(verts) != 4:
        raise ValueError("tetrahedron required")
    v0 = verts[0]
    cols = [verts[k] - v0 for k in (1, 2, 3)]
    det = cols[0].dot(cols[1].cross(cols[2]))
    if det == 0:
        raise ValueError("degenerate tetrahedron")

    def barycentric_tail(p: Vec):
        rel = p - v0
        out = []
        for k in range(3):
            repl = [rel if i == k else cols[i] for i in range(3)]
            out.append(repl[0].dot(repl[1].cross(repl[2])) / det)
        return out

    base = barycentric_tail(point)
    slope = [b - a for a, b in zip(base, barycentric_tail(point + direction))]
    base = [Fraction(1) - sum(base)] + base
    slope = [-sum(slope)] + slope

    lo, hi = None, None
    for b, s in zip(base, slope):
        # constraint b + s*t >= 0
        if s == 0:
            if b < 0:
                return False
        elif s > 0:
            bound = -b / s
            lo = bound if lo is None or bound > lo else lo
        else:
            bound = -b / s
            hi = bound if hi is None or bound < hi else hi
    return lo is None or hi is None or lo <= hi


def line_sampling_hits(point: Vec, direction: Vec, verts: list[Vec],
                       samples: int = 10_000) -> bool:
    """One-sided sampling route: walk a dense rational t-grid spanning the
    body and report True only when some sampled point lies in the hull
    (membership by exact barycentric solve; tetrahedra only). A False return
    proves nothing."""
    spans = [direction.dot(v - point) for v in verts]
    d2 = direction.dot(direction)
    if d2 == 0:
        raise ValueError("zero direction")
    t_min = min(spans) / d2 - 1
    t_max = max(spans) / d2 + 1
    step = (t_max - t_min) / samples
    v0 = verts[0]
    cols = [verts[k] - v0 for k in (1, 2, 3)]
    det = cols[0].dot(cols[1].cross(cols[2]))
    if det == 0:
        raise ValueError("degenerate tetrahedron")
    for k in range(samples + 1):
        p = point + direction * (t_min + step * k)
        rel = p - v0
        tail = []
        for idx in range(3):
            repl = [rel if i == idx else cols[i] for i in range(3)]
            tail.append(repl[0].dot(repl[1].cross(repl[2])) / det)
        if all(w >= 0 for w in tail) and sum(tail) <= 1:
            return True
    return False


# ============================================================
# 50-digit numeric oracles (mpmath)
# ============================================================


def mp_quad_sign(a: Fraction, b: Fraction, d: Fraction) -> int:
    """Numeric sign of a + b*sqrt(d) at 50 significant digits."""
    with mpmath.workdps(50):
        val = (mpmath.mpf(a.numerator) / a.denominator
               + (mpmath.mpf(b.numerator) / b.denominator)
               * mpmath.sqrt(mpmath.mpf(d.numerator) / d.denominator))
        if val > mpmath.mpf("1e-35"):
            return 1
        if val < mpmath.mpf("-1e-35"):
            return -1
        return 0


def _mp_frac(x) -> mpmath.mpf:
    f = Fraction(x)
    return mpmath.mpf(f.numerator) / f.denominator


def mp_four_line_solutions(lines):
    """Numeric common-transversal solve for four lines at 50 digits.

    lines: list of (direction, moment) exact 3-vector pairs. Returns the
    string "degenerate" when the incidence system has rank < 4 or the
    restricted quadratic vanishes, otherwise a list of 0, 1, or 2 numeric
    6-vectors (direction | moment), each satisfying all four incidences and
    having nonzero direction part. Solutions whose discriminant is too close
    to zero to classify are reported as "ambiguous".
    """
    with mpmath.workdps(50):
        rows = []
        scale = mpmath.mpf(0)
        for d, m in lines:
            row = [_mp_frac(c) for c in m.coords] + \
                  [_mp_frac(c) for c in d.coords]
            rows.append(row)
            scale = max(scale, *(abs(x) for x in row))
        if scale == 0:
            return "degenerate"
        tol = scale * mpmath.mpf("1e-38")

        # Gaussian elimination with partial pivoting; track pivot columns.
        mat = [row[:] for row in rows]
        pivots = []
        r = 0
        for c in range(6):
            best, best_val = -1, tol
            for i in range(r, 4):
                if abs(mat[i][c]) > best_val:
                    best, best_val = i, abs(mat[i][c])
            if best < 0:
                continue
            mat[r], mat[best] = mat[best], mat[r]
            piv = mat[r][c]
            mat[r] = [x / piv for x in mat[r]]
            for i in range(4):
                if i != r and abs(mat[i][c]) > 0:
                    f = mat[i][c]
                    mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
            pivots.append(c)
            r += 1
            if r == 4:
                break
        if r < 4:
            return "degenerate"

        free = [c for c in range(6) if c not in pivots]
        basis = []
        for fc in free:
            vec = [mpmath.mpf(0)] * 6
            vec[fc] = mpmath.mpf(1)
            for prow, pc in zip(mat, pivots):
                vec[pc] = -prow[fc]
            basis.append(vec)

        def quad(x, y):
            # bilinear form of the Plucker relation d . m; the rows pair
            # (m_i | d_i) against solutions laid out as (d | m)
            return sum(x[i] * y[i + 3] + x[i + 3] * y[i] for i in range(3)) / 2

        n1, n2 = basis
        qa, qb2, qc = quad(n1, n1), 2 * quad(n1, n2), quad(n2, n2)
        qscale = max(abs(qa), abs(qb2), abs(qc))
        if qscale < tol:
            return "degenerate"
        qtol = qscale * mpmath.mpf("1e-30")

        sols = []

        def add(al, be):
            vec = [al * a + be * b for a, b in zip(n1, n2)]
            if max(abs(v) for v in vec[:3]) > tol:
                # entries 0..2 are the direction; drop lines at infinity
                sols.append(vec)

        if abs(qa) <= qtol:
            add(mpmath.mpf(1), mpmath.mpf(0))
            if abs(qb2) > qtol:
                add(-qc / qb2, mpmath.mpf(1))
        else:
            disc = qb2 * qb2 - 4 * qa * qc
            if abs(disc) <= qtol * qscale:
                return "ambiguous"
            if disc > 0:
                root = mpmath.sqrt(disc)
                add((-qb2 + root) / (2 * qa), mpmath.mpf(1))
                add((-qb2 - root) / (2 * qa), mpmath.mpf(1))
            # disc < 0: no real transversal through this pair
        return sols


def mp_matches_line(numeric6, exact6, rel_tol="1e-25") -> bool:
    """Projective comparison of a numeric 6-vector with an exact line,
    up to overall scaling (either sign)."""
    with mpmath.workdps(50):
        target = [_to_mpf(c) for c in exact6]
        got = [mpmath.mpf(x) for x in numeric6]
        scale = max(abs(x) for x in target)
        if scale == 0 or max(abs(x) for x in got) == 0:
            return False
        k = max(range(6), key=lambda i: abs(target[i]))
        if abs(got[k]) == 0:
            return False
        ratio = target[k] / got[k]
        tol = scale * mpmath.mpf(rel_tol)
        return all(abs(g * ratio - t) <= tol for g, t in zip(got, target))


def _to_mpf(c) -> mpmath.mpf:
    if isinstance(c, Fraction):
        return _mp_frac(c)
    # QuadScalar-shaped: fields a, b, disc
    return _mp_frac(c.a) + _mp_frac(c.b) * mpmath.sqrt(_mp_frac(c.disc))
