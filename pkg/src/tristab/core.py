"""Exact arithmetic substrate: rational scalars, a real quadratic extension
field, primitive integer rays, orientation predicates, and a feasibility
solver for small linear systems that returns checkable certificates.

No floating point enters any decision made here. All values are immutable
and all functions are pure; callers may share them freely across threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Fraction

ScalarLike = Union[int, Fraction, "QuadScalar"]


def parse_scalar(text: str) -> Fraction:
    """Parse a "p/q" literal; bare integer literals are accepted."""
    return Fraction(text)


def format_scalar(x: int | Fraction) -> str:
    """Canonical "p/q" form, reduced, denominator positive."""
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def sign(x: ScalarLike) -> int:
    """Exact sign in {-1, 0, 1}."""
    if isinstance(x, QuadScalar):
        return x.sign()
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def exact_isqrt(n: int) -> int | None:
    """Integer square root when n is a perfect square, else None."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a perfect rational square, else None."""
    num = exact_isqrt(x.numerator)
    if num is None:
        return None
    den = exact_isqrt(x.denominator)
    if den is None:
        return None
    return Fraction(num, den)


class QuadScalar:
    """Element a + b*sqrt(disc) of a real quadratic extension of Q.

    Operands of a mixed operation must share the discriminant (a purely
    rational operand adopts the other side's). Perfect-square discriminants
    collapse into the rational part, so rational values always normalize to
    b == 0, disc == 0. Signs come from rational comparisons of a^2 against
    b^2*disc; nothing is ever evaluated numerically.
    """

    __slots__ = ("a", "b", "disc")

    def __init__(self, a: int | Fraction, b: int | Fraction = 0,
                 disc: int | Fraction = 0):
        a, b, disc = Fraction(a), Fraction(b), Fraction(disc)
        if disc < 0:
            raise ValueError("negative discriminant")
        if b != 0 and disc != 0:
            root = rational_sqrt(disc)
            if root is not None:
                a, b, disc = a + b * root, Fraction(0), Fraction(0)
        if b == 0 or disc == 0:
            b, disc = Fraction(0), Fraction(0)
        self.a, self.b, self.disc = a, b, disc

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def to_fraction(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self!r} is irrational")
        return self.a

    def sign(self) -> int:
        if self.b == 0:
            return 1 if self.a > 0 else (-1 if self.a < 0 else 0)
        if self.a == 0:
            return 1 if self.b > 0 else -1
        sa = 1 if self.a > 0 else -1
        sb = 1 if self.b > 0 else -1
        if sa == sb:
            return sa
        # opposite-sign parts: the larger of a^2 and b^2*disc decides
        t = self.a * self.a - self.b * self.b * self.disc
        if t == 0:
            return 0
        return sa if t > 0 else -sa

    def _match(self, other) -> "QuadScalar | None":
        if isinstance(other, QuadScalar):
            if self.disc != 0 and other.disc != 0 and self.disc != other.disc:
                raise ValueError("mixed discriminants")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadScalar(other)
        return None

    def _disc_with(self, other: "QuadScalar") -> Fraction:
        return self.disc if self.disc != 0 else other.disc

    def __add__(self, other):
        o = self._match(other)
        if o is None:
            return NotImplemented
        return QuadScalar(self.a + o.a, self.b + o.b, self._disc_with(o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._match(other)
        if o is None:
            return NotImplemented
        return QuadScalar(self.a - o.a, self.b - o.b, self._disc_with(o))

    def __rsub__(self, other):
        o = self._match(other)
        if o is None:
            return NotImplemented
        return QuadScalar(o.a - self.a, o.b - self.b, self._disc_with(o))

    def __mul__(self, other):
        o = self._match(other)
        if o is None:
            return NotImplemented
        d = self._disc_with(o)
        return QuadScalar(self.a * o.a + self.b * o.b * d,
                          self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def _inverse(self) -> "QuadScalar":
        den = self.a * self.a - self.b * self.b * self.disc
        if den == 0:
            raise ZeroDivisionError("division by zero QuadScalar")
        return QuadScalar(self.a / den, -self.b / den, self.disc)

    def __truediv__(self, other):
        o = self._match(other)
        if o is None:
            return NotImplemented
        return self * o._inverse()

    def __rtruediv__(self, other):
        o = self._match(other)
        if o is None:
            return NotImplemented
        return o * self._inverse()

    def __neg__(self):
        return QuadScalar(-self.a, -self.b, self.disc)

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __bool__(self) -> bool:
        return self.sign() != 0

    def _cmp(self, other) -> int | None:
        o = self._match(other)
        if o is None:
            return None
        return (self - o).sign()

    def __eq__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c == 0

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    def __hash__(self):
        # rational values must hash like their Fraction
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.disc))

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(float(self.disc))

    def __repr__(self) -> str:
        if self.b == 0:
            return f"QuadScalar({self.a})"
        return f"QuadScalar({self.a}, {self.b}, {self.disc})"


def quad_sqrt(x: int | Fraction) -> Fraction | QuadScalar:
    """Exact square root: a Fraction for perfect squares, else sqrt(x) as a
    QuadScalar."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("negative radicand")
    r = rational_sqrt(x)
    return r if r is not None else QuadScalar(0, 1, x)


# ============================================================
# Vectors and rays
# ============================================================

class ZeroVector(ValueError):
    """A direction-like quantity degenerated to the zero vector."""


class Vec:
    """Immutable exact vector; entries are Fractions or QuadScalars."""

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable[ScalarLike]):
        out = []
        for c in coords:
            if isinstance(c, QuadScalar):
                out.append(c)
            elif isinstance(c, float):
                raise TypeError("floats are not allowed in exact vectors")
            else:
                out.append(Fraction(c))
        if not out:
            raise ValueError("empty vector")
        self.coords = tuple(out)

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def x(self):
        return self.coords[0]

    @property
    def y(self):
        return self.coords[1]

    @property
    def z(self):
        return self.coords[2]

    def _same_dim(self, other: "Vec"):
        if len(self.coords) != len(other.coords):
            raise ValueError("dimension mismatch")

    def __add__(self, other: "Vec") -> "Vec":
        self._same_dim(other)
        return Vec(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: "Vec") -> "Vec":
        self._same_dim(other)
        return Vec(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> "Vec":
        return Vec(-a for a in self.coords)

    def __mul__(self, s: ScalarLike) -> "Vec":
        return Vec(a * s for a in self.coords)

    __rmul__ = __mul__

    def dot(self, other: "Vec") -> ScalarLike:
        self._same_dim(other)
        total = Fraction(0)
        for a, b in zip(self.coords, other.coords):
            total = total + a * b
        return total

    def cross(self, other: "Vec") -> "Vec":
        if self.dim != 3 or other.dim != 3:
            raise ValueError("cross product needs dimension 3")
        (a1, a2, a3), (b1, b2, b3) = self.coords, other.coords
        return Vec((a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1))

    def is_zero(self) -> bool:
        return all(sign(c) == 0 for c in self.coords)

    def __eq__(self, other):
        if not isinstance(other, Vec):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __len__(self):
        return len(self.coords)

    def __repr__(self):
        return f"Vec({list(self.coords)!r})"


def vec3(x: ScalarLike, y: ScalarLike, z: ScalarLike) -> Vec:
    return Vec((x, y, z))


class Ray:
    """Positive-scaling class of a nonzero rational vector, stored as its
    unique primitive integer representative."""

    __slots__ = ("ints",)

    def __init__(self, ints: Sequence[int]):
        ints = tuple(int(i) for i in ints)
        if not any(ints):
            raise ZeroVector("zero vector has no ray")
        if math.gcd(*ints) != 1:
            raise ValueError("not primitive; build rays via canonical_ray")
        self.ints = ints

    @property
    def dim(self) -> int:
        return len(self.ints)

    def as_vec(self) -> Vec:
        return Vec(self.ints)

    def antipode(self) -> "Ray":
        return Ray(tuple(-i for i in self.ints))

    def dot(self, v: Vec) -> ScalarLike:
        total = Fraction(0)
        for i, c in zip(self.ints, v.coords):
            total = total + i * c
        return total

    def __eq__(self, other):
        if not isinstance(other, Ray):
            return NotImplemented
        return self.ints == other.ints

    def __hash__(self):
        return hash(self.ints)

    def __repr__(self):
        return f"Ray{self.ints}"


def canonical_ray(v: Vec | Iterable[ScalarLike]) -> Ray:
    """Quotient a nonzero rational vector by positive scaling.

    Raises ZeroVector on the zero vector and TypeError on irrational input.
    """
    coords = list(v.coords) if isinstance(v, Vec) else list(v)
    fracs: list[Fraction] = []
    for c in coords:
        if isinstance(c, QuadScalar):
            if not c.is_rational:
                raise TypeError("rays require rational coordinates")
            c = c.to_fraction()
        fracs.append(Fraction(c))
    if all(f == 0 for f in fracs):
        raise ZeroVector("zero vector has no ray")
    den = math.lcm(*(f.denominator for f in fracs))
    ints = [int(f * den) for f in fracs]
    g = math.gcd(*ints)
    return Ray(tuple(i // g for i in ints))


def orientation(p: Vec, q: Vec, r: Vec, s: Vec) -> int:
    """Sign of det[q-p, r-p, s-p]; +1 / -1 for the two chiralities, 0 when
    coplanar."""
    u, v, w = q - p, r - p, s - p
    return sign(u.dot(v.cross(w)))


# ============================================================
# Linear systems and the feasibility solver
# ============================================================

GE = "ge"
EQ = "eq"

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _coerce(x: ScalarLike):
    if isinstance(x, QuadScalar):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not allowed in exact computations")
    return Fraction(x)


@dataclass(frozen=True)
class Row:
    coeffs: tuple
    rel: str
    rhs: object


class LinearSystem:
    """A conjunction of exact linear constraints over n variables.

    Relations are ">= rhs" and "== rhs" only; add_le records a <= row as its
    negation. Variables are free unless solved via lp_solve_nonneg, which
    additionally imposes x >= 0 on every variable.
    """

    def __init__(self, n_vars: int):
        if n_vars < 0:
            raise ValueError("negative variable count")
        self.n_vars = n_vars
        self.rows: list[Row] = []

    def add(self, coeffs: Sequence[ScalarLike], rel: str, rhs: ScalarLike):
        coeffs = tuple(_coerce(c) for c in coeffs)
        if len(coeffs) != self.n_vars:
            raise ValueError("coefficient arity mismatch")
        if rel not in (GE, EQ):
            raise ValueError(f"unknown relation {rel!r}")
        self.rows.append(Row(coeffs, rel, _coerce(rhs)))
        return self

    def add_ge(self, coeffs, rhs):
        return self.add(coeffs, GE, rhs)

    def add_eq(self, coeffs, rhs):
        return self.add(coeffs, EQ, rhs)

    def add_le(self, coeffs, rhs):
        return self.add([-_coerce(c) for c in coeffs], GE, -_coerce(rhs))

    def __len__(self):
        return len(self.rows)

    def __repr__(self):
        return f"LinearSystem(n_vars={self.n_vars}, rows={len(self.rows)})"


@dataclass(frozen=True)
class Feasible:
    witness: tuple


@dataclass(frozen=True)
class FarkasCert:
    """Row multipliers combining the system into 0 >= positive.

    Multipliers on >=-rows are nonnegative; equality rows are unrestricted.
    In nonneg mode the combined row only has to be componentwise <= 0, since
    x >= 0 absorbs the slack.
    """

    multipliers: tuple


@dataclass(frozen=True)
class Infeasible:
    cert: FarkasCert


def verify_witness(system: LinearSystem, witness: Sequence[ScalarLike],
                   nonneg: bool = False) -> bool:
    """Exact substitution check of a claimed solution."""
    if len(witness) != system.n_vars:
        return False
    if nonneg and any(sign(_coerce(x)) < 0 for x in witness):
        return False
    for row in system.rows:
        total = Fraction(0)
        for c, x in zip(row.coeffs, witness):
            total = total + c * x
        s = sign(total - row.rhs)
        if row.rel == EQ and s != 0:
            return False
        if row.rel == GE and s < 0:
            return False
    return True


def verify_farkas(system: LinearSystem, cert: FarkasCert,
                  nonneg: bool = False) -> bool:
    """Exact check that the multipliers derive a contradiction."""
    mult = cert.multipliers
    if len(mult) != len(system.rows):
        return False
    for y, row in zip(mult, system.rows):
        if row.rel == GE and sign(_coerce(y)) < 0:
            return False
    for j in range(system.n_vars):
        total = Fraction(0)
        for y, row in zip(mult, system.rows):
            total = total + y * row.coeffs[j]
        s = sign(total)
        if nonneg:
            if s > 0:
                return False
        elif s != 0:
            return False
    combined_rhs = Fraction(0)
    for y, row in zip(mult, system.rows):
        combined_rhs = combined_rhs + y * row.rhs
    return sign(combined_rhs) > 0


def _canonical_multipliers(mult: tuple) -> tuple:
    """Rescale a valid multiplier vector to primitive integer form.

    Positive scaling preserves Farkas validity; irrational multipliers
    (QuadScalar systems) are returned unchanged.
    """
    fracs = []
    for y in mult:
        if isinstance(y, QuadScalar):
            if not y.is_rational:
                return mult
            y = y.to_fraction()
        fracs.append(Fraction(y))
    if all(f == 0 for f in fracs):
        return tuple(fracs)
    den = math.lcm(*(f.denominator for f in fracs))
    ints = [int(f * den) for f in fracs]
    g = math.gcd(*ints)
    return tuple(Fraction(i // g) for i in ints)


@dataclass(frozen=True)
class Optimal:
    witness: tuple
    value: object


class _Tableau:
    """Dense exact simplex tableau with Bland's anti-cycling rule.

    Free variables are split into positive and negative parts; every row
    gets an artificial variable so phase 1 starts from the identity basis.
    """

    def __init__(self, system: LinearSystem, nonneg: bool):
        rows = system.rows
        self.m, self.n = len(rows), system.n_vars
        self.nonneg = nonneg
        ge_rows = [i for i, r in enumerate(rows) if r.rel == GE]
        base = self.n if nonneg else 2 * self.n
        self.n_struct = base + len(ge_rows)
        self.ncols = self.n_struct + self.m
        surplus_col = {i: base + k for k, i in enumerate(ge_rows)}

        self.T: list[list] = []
        self.rhs: list = []
        self.sig: list[int] = []
        for i, row in enumerate(rows):
            s = -1 if sign(row.rhs) < 0 else 1
            self.sig.append(s)
            line = [_ZERO] * self.ncols
            for j, c in enumerate(row.coeffs):
                if sign(c) == 0:
                    continue
                line[j] = s * c
                if not nonneg:
                    line[self.n + j] = -s * c
            if row.rel == GE:
                line[surplus_col[i]] = Fraction(-s)
            line[self.n_struct + i] = _ONE
            self.T.append(line)
            self.rhs.append(s * row.rhs)
        self.basis = [self.n_struct + i for i in range(self.m)]

    def _pivot(self, leave: int, enter: int, obj: list):
        T, rhs = self.T, self.rhs
        piv = T[leave][enter]
        T[leave] = [a / piv for a in T[leave]]
        rhs[leave] = rhs[leave] / piv
        prow, prhs = T[leave], rhs[leave]
        for i in range(self.m):
            if i == leave:
                continue
            f = T[i][enter]
            if sign(f) == 0:
                continue
            # prow is sparse; untouched columns keep their entries
            T[i] = [a - f * b if sign(b) != 0 else a
                    for a, b in zip(T[i], prow)]
            rhs[i] = rhs[i] - f * prhs
        f = obj[enter]
        if sign(f) != 0:
            obj[:] = [a - f * b if sign(b) != 0 else a
                      for a, b in zip(obj, prow)]
        self.basis[leave] = enter

    def minimize(self, obj: list, allowed: int) -> None:
        """Run Bland pivots until no allowed column has a negative reduced
        cost. obj is mutated in place; raises on unbounded descent."""
        budget = 2000 + 64 * (self.m + self.ncols)
        for _ in range(budget):
            enter = -1
            for j in range(allowed):
                if sign(obj[j]) < 0:
                    enter = j
                    break
            if enter < 0:
                return
            leave, best = -1, None
            for i in range(self.m):
                a = self.T[i][enter]
                if sign(a) > 0:
                    ratio = self.rhs[i] / a
                    if best is None or ratio < best or (
                            ratio == best
                            and self.basis[i] < self.basis[leave]):
                        best = ratio
                        leave = i
            if leave < 0:
                raise AssertionError("objective unbounded")
            self._pivot(leave, enter, obj)
        raise AssertionError("pivot budget exceeded")

    def phase1(self):
        """Minimize the artificial sum; returns (infeasibility, obj_row)."""
        obj = [_ZERO] * self.ncols
        for j in range(self.n_struct):
            total = _ZERO
            for i in range(self.m):
                total = total - self.T[i][j]
            obj[j] = total
        self.minimize(obj, self.ncols)
        level = _ZERO
        for i in range(self.m):
            if self.basis[i] >= self.n_struct:
                level = level + self.rhs[i]
        return level, obj

    def drop_artificials(self) -> None:
        """After a feasible phase 1, pivot basic artificials out and delete
        redundant rows, leaving a purely structural basis."""
        i = 0
        while i < self.m:
            if self.basis[i] >= self.n_struct:
                enter = next((j for j in range(self.n_struct)
                              if sign(self.T[i][j]) != 0), -1)
                if enter < 0:
                    del self.T[i], self.rhs[i], self.basis[i], self.sig[i]
                    self.m -= 1
                    continue
                dummy = [_ZERO] * self.ncols
                self._pivot(i, enter, dummy)
            i += 1
        for i in range(self.m):
            self.T[i] = self.T[i][:self.n_struct]
        self.ncols = self.n_struct

    def witness(self) -> tuple:
        vals = {self.basis[i]: self.rhs[i] for i in range(self.m)}
        if self.nonneg:
            return tuple(vals.get(j, _ZERO) for j in range(self.n))
        return tuple(vals.get(j, _ZERO) - vals.get(self.n + j, _ZERO)
                     for j in range(self.n))


def _solve(system: LinearSystem, nonneg: bool) -> Feasible | Infeasible:
    """Phase-1 simplex: a zero artificial optimum reads off a witness, a
    positive one reads off dual prices, which translate into Farkas
    multipliers for the original rows."""
    if not system.rows:
        return Feasible(tuple(_ZERO for _ in range(system.n_vars)))
    tab = _Tableau(system, nonneg)
    infeasibility, obj = tab.phase1()
    if sign(infeasibility) > 0:
        # dual prices from artificial reduced costs: y_i = 1 - cbar_i
        mult = tuple(tab.sig[i] * (_ONE - obj[tab.n_struct + i])
                     for i in range(tab.m))
        cert = FarkasCert(_canonical_multipliers(mult))
        if not verify_farkas(system, cert, nonneg=nonneg):
            raise AssertionError("internal error: invalid Farkas certificate")
        return Infeasible(cert)
    x = tab.witness()
    if not verify_witness(system, x, nonneg=nonneg):
        raise AssertionError("internal error: invalid feasibility witness")
    return Feasible(x)


def lp_solve(system: LinearSystem) -> Feasible | Infeasible:
    """Decide feasibility over free variables.

    Feasible results carry a point satisfying every row; Infeasible results
    carry a FarkasCert whose verification is plain arithmetic. Unbounded
    feasible regions still return a witness, since no objective is involved.
    """
    return _solve(system, nonneg=False)


def lp_solve_nonneg(system: LinearSystem) -> Feasible | Infeasible:
    """Decide feasibility of the system together with x >= 0 on every
    variable. Certificates follow the relaxed Farkas convention documented on
    FarkasCert."""
    return _solve(system, nonneg=True)


def lp_maximize(system: LinearSystem, objective: Sequence[ScalarLike],
                nonneg: bool = False) -> Optimal | Infeasible:
    """Maximize objective . x over the system (two-phase simplex).

    The feasible region must be bounded in the objective direction; the
    geometric callers guarantee that by construction. Determinism comes from
    Bland's rule, so equal inputs yield identical optima.
    """
    if len(objective) != system.n_vars:
        raise ValueError("objective arity mismatch")
    if not system.rows:
        raise ValueError("unconstrained objective")
    tab = _Tableau(system, nonneg)
    infeasibility, _ = tab.phase1()
    if sign(infeasibility) > 0:
        return _solve(system, nonneg)  # reuse the certificate path
    tab.drop_artificials()

    cost = [_ZERO] * tab.ncols  # minimize -objective
    for j, c in enumerate(objective):
        c = _coerce(c)
        cost[j] = -c
        if not nonneg:
            cost[tab.n + j] = c
    obj = cost[:]
    for i in range(tab.m):
        cb = cost[tab.basis[i]]
        if sign(cb) != 0:
            obj = [a - cb * b for a, b in zip(obj, tab.T[i])]
    tab.minimize(obj, tab.ncols)

    x = tab.witness()
    if not verify_witness(system, x, nonneg=nonneg):
        raise AssertionError("internal error: invalid optimum witness")
    value = _ZERO
    for c, xi in zip(objective, x):
        value = value + _coerce(c) * xi
    return Optimal(x, value)
