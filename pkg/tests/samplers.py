"""Seeded random generators shared across test modules.

Every sampler takes an explicit random.Random so test runs are reproducible
and failures replayable from the printed seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from tristab.convex import ConvexBody, Triangle
from tristab.core import LinearSystem, Ray, Vec, canonical_ray, orientation
from tristab.sphere import Cone


def random_fraction(rng: random.Random, bound: int = 6,
                    max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def random_linear_system(rng: random.Random, max_vars: int = 5,
                         max_rows: int = 8, bound: int = 4) -> LinearSystem:
    """Small dense-ish system mixing >= and == rows, integer data."""
    n = rng.randint(1, max_vars)
    m = rng.randint(1, max_rows)
    sys = LinearSystem(n)
    for _ in range(m):
        coeffs = [rng.randint(-bound, bound) for _ in range(n)]
        rhs = rng.randint(-bound - 2, bound + 2)
        if rng.random() < 0.2:
            sys.add_eq(coeffs, rhs)
        else:
            sys.add_ge(coeffs, rhs)
    return sys


def random_int_vec(rng: random.Random, bound: int = 9, dim: int = 3) -> Vec:
    return Vec([rng.randint(-bound, bound) for _ in range(dim)])


def random_nonzero_vec(rng: random.Random, bound: int = 9,
                       dim: int = 3) -> Vec:
    while True:
        v = random_int_vec(rng, bound, dim)
        if not v.is_zero():
            return v


def random_triangle(rng: random.Random, bound: int = 9,
                    nondegenerate: bool = False) -> Triangle:
    while True:
        t = Triangle(random_int_vec(rng, bound), random_int_vec(rng, bound),
                     random_int_vec(rng, bound))
        if not nondegenerate or not t.is_degenerate():
            return t


def random_tetra(rng: random.Random, bound: int = 9) -> ConvexBody:
    """Nondegenerate tetrahedron (nonzero volume)."""
    while True:
        vs = [random_int_vec(rng, bound) for _ in range(4)]
        if orientation(*vs) != 0:
            return ConvexBody(vs)


def random_body(rng: random.Random, bound: int = 9,
                max_vertices: int = 4) -> ConvexBody:
    n = rng.randint(1, max_vertices)
    return ConvexBody([random_int_vec(rng, bound) for _ in range(n)])


def random_unimodular(rng: random.Random, steps: int = 6):
    """Integer 3x3 matrix with determinant +-1, as a list of row tuples."""
    m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    for _ in range(steps):
        i, j = rng.sample(range(3), 2)
        c = rng.choice([-2, -1, 1, 2])
        for k in range(3):
            m[i][k] += c * m[j][k]
        if rng.random() < 0.3:
            m[i] = [-x for x in m[i]]
    return [tuple(row) for row in m]


def apply_affine(body: ConvexBody, matrix, shift: Vec) -> ConvexBody:
    out = []
    for v in body.vertices:
        out.append(Vec(sum(r[k] * v.coords[k] for k in range(3))
                       for r in matrix) + shift)
    return type(body)(*out) if isinstance(body, Triangle) \
        else ConvexBody(out)


def random_matrix_points(rng: random.Random, bound: int = 20):
    return [[random_int_vec(rng, bound) for _ in range(3)] for _ in range(3)]


def random_arc_pair(rng: random.Random, bound: int = 9):
    """Two nondegenerate sphere arcs given by endpoint vectors (v1,v2,u1,u2);
    each endpoint pair is linearly independent (non-parallel, non-antipodal),
    as SphereDrawing arcs require."""
    def arc():
        while True:
            p = random_nonzero_vec(rng, bound)
            q = random_nonzero_vec(rng, bound)
            if not p.cross(q).is_zero():
                return p, q
    v1, v2 = arc()
    u1, u2 = arc()
    return v1, v2, u1, u2


def random_ray(rng: random.Random, bound: int = 9, dim: int = 3) -> Ray:
    return canonical_ray(random_nonzero_vec(rng, bound, dim))


def random_cone(rng: random.Random, bound: int = 9, dim: int = 3,
                max_generators: int = 3) -> Cone:
    n = rng.randint(1, max_generators)
    return Cone(tuple(random_ray(rng, bound, dim) for _ in range(n)))


def random_drawing_rays(rng: random.Random, bound: int = 9):
    """Three blue and three red rays in general position: all six distinct,
    no blue/red pair antipodal, no three of the six linearly dependent."""
    while True:
        rays = [random_ray(rng, bound) for _ in range(6)]
        if len(set(rays)) != 6:
            continue
        blue, red = rays[:3], rays[3:]
        if any(b.antipode() == r for b in blue for r in red):
            continue
        vecs = [r.as_vec() for r in rays]
        if any(vecs[a].cross(vecs[b]).dot(vecs[c]) == 0
               for a in range(6) for b in range(a + 1, 6)
               for c in range(b + 1, 6)):
            continue
        return blue, red


def random_cayley_rotation(rng: random.Random, bound: int = 3):
    """Rational rotation matrix rows via the Cayley transform of a random
    skew matrix: R = (I - S)^-1 (I + S)."""
    a = random_fraction(rng, bound)
    b = random_fraction(rng, bound)
    c = random_fraction(rng, bound)
    s = [[Fraction(0), -a, -b],
         [a, Fraction(0), -c],
         [b, c, Fraction(0)]]
    left = [[Fraction(int(i == j)) - s[i][j] for j in range(3)]
            for i in range(3)]
    right = [[Fraction(int(i == j)) + s[i][j] for j in range(3)]
             for i in range(3)]

    def det3(m):
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))

    d = det3(left)
    cof = [[(left[(i + 1) % 3][(j + 1) % 3] * left[(i + 2) % 3][(j + 2) % 3]
             - left[(i + 1) % 3][(j + 2) % 3] * left[(i + 2) % 3][(j + 1) % 3])
            for j in range(3)] for i in range(3)]
    inv = [[cof[j][i] / d for j in range(3)] for i in range(3)]
    rot = [[sum(inv[i][k] * right[k][j] for k in range(3)) for j in range(3)]
           for i in range(3)]
    return [tuple(row) for row in rot]


def random_triangle_triple(rng: random.Random, bound: int = 9):
    return [random_triangle(rng, bound, nondegenerate=True)
            for _ in range(3)]


def random_stabbed_triple(rng: random.Random, bound: int = 9):
    """Three triangles each holding a sampled point of a common random
    line strictly inside, so a robust transversal exists by construction."""
    p = random_int_vec(rng, bound)
    d = random_nonzero_vec(rng, max(2, bound // 2))
    out = []
    for t in (-2, 0, 2):
        center = p + d * t
        while True:
            u = random_nonzero_vec(rng, bound)
            v = random_nonzero_vec(rng, bound)
            if u.cross(v).is_zero():
                continue
            tri = Triangle(center + u, center + v,
                           center - u - v)
            if not tri.is_degenerate():
                out.append(tri)
                break
    return out, p, d


def random_halfspace_pattern(rng: random.Random, r: int, s: int, dim: int,
                             bound: int = 9):
    """Two halfspace bundles with points a / z in crossed strict position.

    Built around a random separating axis: a sits far along it, z far the
    other way, bundle normals lean toward their own point. The construction
    makes acceptance likely, never certain, so every draw is re-checked and
    rejected unless all cross slacks are strictly negative.
    Returns (first, second, a, z).
    """
    from tristab.convex import halfspace

    spread = 4 * dim * bound * bound
    while True:
        axis = random_nonzero_vec(rng, bound, dim)
        noise_a = random_int_vec(rng, bound, dim)
        noise_z = random_int_vec(rng, bound, dim)
        a = axis * spread + noise_a
        z = axis * (-spread) + noise_z
        bundles = []
        for count, anchor_pt, toward in ((r, a, 1), (s, z, -1)):
            bundle = []
            for _ in range(count):
                while True:
                    n = random_nonzero_vec(rng, bound, dim)
                    lean = n.dot(axis)
                    if lean != 0:
                        break
                if (lean > 0) != (toward > 0):
                    n = n * -1
                gap = Fraction(rng.randint(1, 3 * bound), rng.randint(1, 4))
                bundle.append(halfspace(n, n.dot(anchor_pt) - gap))
            bundles.append(tuple(bundle))
        first, second = bundles
        if all(h.slack(z) < 0 for h in first) and \
                all(h.slack(a) < 0 for h in second):
            return first, second, a, z


def random_lemma_instance(rng: random.Random, dim: int = 3, bound: int = 9):
    from tristab.lemma import LemmaInstance

    first, second, a, z = random_halfspace_pattern(rng, 2, 2, dim, bound)
    return LemmaInstance(first[0], first[1], second[0], second[1], a, z)


def random_pencil_instance(rng: random.Random, r: int, s: int, dim: int,
                           bound: int = 9):
    from tristab.lemma import PencilInstance

    first, second, a, z = random_halfspace_pattern(rng, r, s, dim, bound)
    return PencilInstance(first, second, a, z)
