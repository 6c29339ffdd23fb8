"""Generalized quaternion algebras H_K(alpha, beta).

The basis is {1, e1, e2, e3} with e1^2 = alpha, e2^2 = beta, e1*e2 = e3,
e2*e1 = -e3; multiplication extends the four by four basis table
bilinearly.  Split/division decisions come with exact witnesses: a point
on the associated conic alpha*x^2 + beta*y^2 = z^2 for split algebras,
an exhaustive isotropic-vector search for division consistency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .fields import QQ, QSQRT3, FieldDescriptor, FieldElement
from .intmath import is_prime


@dataclass(frozen=True)
class QuaternionAlgebra:
    desc: FieldDescriptor
    alpha: FieldElement
    beta: FieldElement

    def __post_init__(self):
        if self.alpha.desc != self.desc or self.beta.desc != self.desc:
            raise ValueError("alpha and beta must live in the base field")
        if self.alpha.is_zero() or self.beta.is_zero():
            raise ValueError("alpha and beta must be nonzero")

    def element(self, x0, x1, x2, x3) -> "Quaternion":
        lift = lambda v: v if isinstance(v, FieldElement) else self.desc.lift(v)
        return Quaternion(self, lift(x0), lift(x1), lift(x2), lift(x3))

    def zero(self) -> "Quaternion":
        return self.element(0, 0, 0, 0)

    def one(self) -> "Quaternion":
        return self.element(1, 0, 0, 0)

    def basis(self) -> tuple["Quaternion", ...]:
        coords = [[0] * 4 for _ in range(4)]
        for i in range(4):
            coords[i][i] = 1
        return tuple(self.element(*c) for c in coords)

    def _table(self):
        one = self.desc.one()
        a, b = self.alpha, self.beta
        # rows index the left factor, columns the right one; entries are
        # (basis index, coefficient) exactly as in the defining table
        return (
            ((0, one), (1, one), (2, one), (3, one)),
            ((1, one), (0, a), (3, one), (2, a)),
            ((2, one), (3, -one), (0, b), (1, -b)),
            ((3, one), (2, -a), (1, b), (0, -a * b)),
        )


@lru_cache(maxsize=None)
def _pair_table(alg: "QuaternionAlgebra"):
    """The basis table with coefficients as raw (c0, c1) pairs; the
    coefficient 1 is stored as None so the hot loop can skip it."""
    table = []
    for row in alg._table():
        entries = []
        for index, coeff in row:
            if coeff == alg.desc.one():
                entries.append((index, None))
            else:
                entries.append((index, (coeff.c0, coeff.c1)))
        table.append(tuple(entries))
    return tuple(table)


@dataclass(frozen=True)
class Quaternion:
    algebra: QuaternionAlgebra
    x0: FieldElement
    x1: FieldElement
    x2: FieldElement
    x3: FieldElement

    @property
    def coords(self) -> tuple[FieldElement, FieldElement, FieldElement, FieldElement]:
        return (self.x0, self.x1, self.x2, self.x3)

    def _check(self, other: "Quaternion"):
        if self.algebra != other.algebra:
            raise ValueError("quaternions belong to different algebras")

    def __add__(self, other: "Quaternion") -> "Quaternion":
        self._check(other)
        return Quaternion(self.algebra, *(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        self._check(other)
        return Quaternion(self.algebra, *(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> "Quaternion":
        return Quaternion(self.algebra, *(-x for x in self.coords))

    def scale(self, c) -> "Quaternion":
        return Quaternion(self.algebra, *(x * c for x in self.coords))

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        # same raw-pair kernel as the symbol product: fraction arithmetic
        # inline, element objects built only for the four output coords
        self._check(other)
        desc = self.algebra.desc
        u_, w_ = desc.u, desc.w

        def pmul(x, y):
            a0, a1 = x
            b0, b1 = y
            return (a0 * b0 - w_ * a1 * b1, a0 * b1 + a1 * b0 - u_ * a1 * b1)

        table = _pair_table(self.algebra)
        acc = [None] * 4
        for i, xi in enumerate(self.coords):
            if xi.c0 == 0 and xi.c1 == 0:
                continue
            xp = (xi.c0, xi.c1)
            for j, yj in enumerate(other.coords):
                if yj.c0 == 0 and yj.c1 == 0:
                    continue
                index, coeff = table[i][j]
                term = pmul(xp, (yj.c0, yj.c1))
                if coeff is not None:
                    term = pmul(term, coeff)
                before = acc[index]
                acc[index] = term if before is None else (before[0] + term[0], before[1] + term[1])
        zero = desc.zero()
        coords = [
            zero if pair is None else FieldElement(desc, pair[0], pair[1]) for pair in acc
        ]
        return Quaternion(self.algebra, *coords)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.algebra, self.x0, -self.x1, -self.x2, -self.x3)

    def trace(self) -> FieldElement:
        return self.x0 + self.x0

    def norm(self) -> FieldElement:
        # x0^2 - alpha*x1^2 - beta*x2^2 + alpha*beta*x3^2 on raw pairs
        desc = self.algebra.desc
        u_, w_ = desc.u, desc.w

        def pmul(x, y):
            a0, a1 = x
            b0, b1 = y
            return (a0 * b0 - w_ * a1 * b1, a0 * b1 + a1 * b0 - u_ * a1 * b1)

        a = (self.algebra.alpha.c0, self.algebra.alpha.c1)
        b = (self.algebra.beta.c0, self.algebra.beta.c1)
        squares = [pmul((x.c0, x.c1), (x.c0, x.c1)) for x in self.coords]
        t1 = pmul(a, squares[1])
        t2 = pmul(b, squares[2])
        t3 = pmul(pmul(a, b), squares[3])
        return FieldElement(
            desc,
            squares[0][0] - t1[0] - t2[0] + t3[0],
            squares[0][1] - t1[1] - t2[1] + t3[1],
        )

    def is_zero(self) -> bool:
        return all(x.is_zero() for x in self.coords)


@dataclass(frozen=True)
class ConicPoint:
    x: FieldElement
    y: FieldElement
    z: FieldElement

    def is_nonzero(self) -> bool:
        return not (self.x.is_zero() and self.y.is_zero() and self.z.is_zero())


def on_conic(alpha: FieldElement, beta: FieldElement, point: ConicPoint) -> bool:
    if not point.is_nonzero():
        return False
    return alpha * point.x * point.x + beta * point.y * point.y == point.z * point.z


@dataclass(frozen=True)
class SplitVerdict:
    """"split" always carries a verified conic point; "division" and
    "unknown" record the search bound that backs them (0 = decided without
    a search)."""

    kind: str  # "split" | "division" | "unknown"
    point: ConicPoint | None = None
    search_bound: int = 0

    def __post_init__(self):
        if self.kind not in ("split", "division", "unknown"):
            raise ValueError(f"unknown verdict kind {self.kind!r}")
        if self.kind == "split" and self.point is None:
            raise ValueError("split verdict needs a conic point")


def gauss_representation(p: int) -> tuple[int, int]:
    """Positive integers (a, b) with 4p = a^2 + 27 b^2, for p = 1 mod 3."""
    if not is_prime(p) or p % 3 != 1:
        raise ValueError("p must be a prime congruent to 1 mod 3")
    for b in range(1, math.isqrt(4 * p // 27) + 1):
        rest = 4 * p - 27 * b * b
        a = math.isqrt(rest)
        if a * a == rest and a > 0:
            return a, b
    raise ArithmeticError(f"no representation 4*{p} = a^2 + 27*b^2")


def conic_point_sqrt3(p: int) -> ConicPoint:
    """The Q(sqrt 3) point (3b*sqrt(3)/2, 1, a/2) on -x^2 + p*y^2 = z^2."""
    a, b = gauss_representation(p)
    point = ConicPoint(
        QSQRT3.element(0, Fraction(3 * b, 2)),
        QSQRT3.one(),
        QSQRT3.element(Fraction(a, 2)),
    )
    assert on_conic(QSQRT3.lift(-1), QSQRT3.lift(p), point)
    return point


def two_square_decomposition(p: int) -> tuple[int, int]:
    """(x, z) with x^2 + z^2 = p and 0 < x <= z, for p = 1 mod 4."""
    for x in range(1, math.isqrt(p) + 1):
        rest = p - x * x
        z = math.isqrt(rest)
        if z * z == rest and z >= x:
            return x, z
    raise ArithmeticError(f"{p} is not a sum of two squares")


def classify_minus1_p(p: int) -> SplitVerdict:
    """Verdict for H_Q(-1, p) at an odd prime p: division when p = 3 mod 4,
    split with the conic point (x, 1, z) from x^2 + z^2 = p otherwise."""
    if not is_prime(p) or p == 2:
        raise ValueError("p must be an odd prime")
    if p % 4 == 3:
        return SplitVerdict("division")
    x, z = two_square_decomposition(p)
    point = ConicPoint(QQ.lift(x), QQ.one(), QQ.lift(z))
    assert on_conic(QQ.lift(-1), QQ.lift(p), point)
    return SplitVerdict("split", point=point)


def _integer_invariant(e: FieldElement) -> int:
    v = e.as_rational()
    if v.denominator != 1:
        raise ValueError("search needs integer alpha and beta")
    return int(v)


def norm_form_zero_search(alg: QuaternionAlgebra, bound: int) -> Quaternion | None:
    """First primitive integer vector (lexicographic order, coordinates in
    [-bound, bound]) with vanishing norm form, or None if there is none.

    The quartic loop is folded into a pairing of x0^2 - alpha*x1^2 against
    beta*(x2^2 - alpha*x3^2); a witness exists among all integer vectors
    iff one exists among the primitive ones.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    if alg.desc != QQ:
        raise ValueError("zero search is defined over Q")
    a = _integer_invariant(alg.alpha)
    b = _integer_invariant(alg.beta)
    rng = range(-bound, bound + 1)
    right: dict[int, list[tuple[int, int]]] = {}
    for x2 in rng:
        for x3 in rng:
            right.setdefault(b * (x2 * x2 - a * x3 * x3), []).append((x2, x3))
    for x0 in rng:
        for x1 in rng:
            left = x0 * x0 - a * x1 * x1
            for x2, x3 in right.get(left, ()):
                if (x0 or x1 or x2 or x3) and math.gcd(x0, x1, x2, x3) == 1:
                    witness = alg.element(x0, x1, x2, x3)
                    assert witness.norm().is_zero()
                    return witness
    return None


def zero_divisor_from_isotropic(a: Quaternion) -> tuple[Quaternion, Quaternion]:
    """(a, conj(a)) as a verified zero-divisor pair for isotropic a != 0."""
    if a.is_zero():
        raise ValueError("need a nonzero quaternion")
    if not a.norm().is_zero():
        raise ValueError("quaternion is not isotropic")
    conj = a.conjugate()
    product = a * conj
    assert product.is_zero() and not conj.is_zero()
    return a, conj
