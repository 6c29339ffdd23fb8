"""Exact arithmetic over Q and quadratic extensions Q[t]/(t^2 + u*t + w).

Elements are pairs of reduced rationals attached to a shared descriptor.
The cube-root-of-unity field uses minimal polynomial coefficients
(u, w) = (1, 1); square-root fields Q(sqrt d) use (0, -d).  The text
grammar prints the quadratic generator as ``w``, e.g. ``3+1*w``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

# Reduced p/q with q > 0; fractions.Fraction guarantees both invariants.
Rational = Fraction


class ParseError(ValueError):
    """Text does not match the element grammar."""


_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_TERM_RE = re.compile(r"[+-]?[^+-]+")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or "p" (only integer numerator/denominator forms)."""
    s = re.sub(r"\s+", "", text)
    if not _RATIONAL_RE.match(s):
        raise ParseError(f"not a rational: {text!r}")
    return Fraction(s)


def is_rational_square(q: Fraction | int) -> bool:
    q = Fraction(q)
    if q < 0:
        return False
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    return rn * rn == q.numerator and rd * rd == q.denominator


def _squarefree(n: int) -> bool:
    n = abs(n)
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return False
        d += 1
    return True


@dataclass(frozen=True)
class FieldDescriptor:
    """Q (degree 1) or the quadratic field Q[t]/(t^2 + u*t + w) (degree 2)."""

    degree: int
    u: Fraction = Fraction(0)
    w: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "u", Fraction(self.u))
        object.__setattr__(self, "w", Fraction(self.w))
        if self.degree not in (1, 2):
            raise ValueError("only Q and quadratic extensions are supported")
        if self.degree == 2 and is_rational_square(self.u * self.u - 4 * self.w):
            raise ValueError("t^2 + u*t + w must be irreducible over Q")

    def element(self, c0, c1=0) -> "FieldElement":
        return FieldElement(self, Fraction(c0), Fraction(c1))

    def zero(self) -> "FieldElement":
        return self.element(0)

    def one(self) -> "FieldElement":
        return self.element(1)

    def lift(self, q) -> "FieldElement":
        """Canonical embedding of a rational; the only cross-field coercion."""
        return self.element(Fraction(q))

    def gen(self) -> "FieldElement":
        if self.degree == 1:
            raise ValueError("Q has no quadratic generator")
        return self.element(0, 1)


QQ = FieldDescriptor(1)
QEPS = FieldDescriptor(2, Fraction(1), Fraction(1))


def sqrt_field(d: int) -> FieldDescriptor:
    """Q(sqrt d) for squarefree d != 0, 1."""
    if d in (0, 1) or not _squarefree(d):
        raise ValueError("d must be squarefree and different from 0 and 1")
    return FieldDescriptor(2, Fraction(0), Fraction(-d))


QSQRT3 = sqrt_field(3)


@dataclass(frozen=True)
class FieldElement:
    """c0 + c1*t over the descriptor's field; immutable, exact."""

    desc: FieldDescriptor
    c0: Fraction
    c1: Fraction = Fraction(0)

    def __post_init__(self):
        if not isinstance(self.c0, Fraction):
            object.__setattr__(self, "c0", Fraction(self.c0))
        if not isinstance(self.c1, Fraction):
            object.__setattr__(self, "c1", Fraction(self.c1))
        if self.desc.degree == 1 and self.c1 != 0:
            raise ValueError("rational field element cannot carry a generator part")

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.desc != self.desc:
                raise ValueError("elements belong to different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.desc.lift(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.desc, self.c0 + o.c0, self.c1 + o.c1)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.desc, self.c0 - o.c0, self.c1 - o.c1)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return FieldElement(self.desc, -self.c0, -self.c1)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.c0 == 0 and self.c1 == 0:
            return self
        if o.c0 == 0 and o.c1 == 0:
            return o
        if self.desc.degree == 1:
            return FieldElement(self.desc, self.c0 * o.c0)
        # (a0 + a1 t)(b0 + b1 t) with t^2 = -u*t - w
        u, w = self.desc.u, self.desc.w
        a0, a1, b0, b1 = self.c0, self.c1, o.c0, o.c1
        return FieldElement(self.desc, a0 * b0 - w * a1 * b1, a0 * b1 + a1 * b0 - u * a1 * b1)

    __rmul__ = __mul__

    def conjugate(self) -> "FieldElement":
        """Image under t -> -u - t (identity on Q)."""
        if self.desc.degree == 1:
            return self
        return FieldElement(self.desc, self.c0 - self.desc.u * self.c1, -self.c1)

    def norm(self) -> Fraction:
        """Product with the conjugate, as a rational; the element itself on Q."""
        if self.desc.degree == 1:
            return self.c0
        u, w = self.desc.u, self.desc.w
        return self.c0 * self.c0 - u * self.c0 * self.c1 + w * self.c1 * self.c1

    def is_zero(self) -> bool:
        return self.c0 == 0 and self.c1 == 0

    def is_rational(self) -> bool:
        return self.c1 == 0

    def as_rational(self) -> Fraction:
        if self.c1 != 0:
            raise ValueError("element is not rational")
        return self.c0

    def inv(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.desc.degree == 1:
            return FieldElement(self.desc, 1 / self.c0)
        # norm is nonzero for nonzero elements because the minimal polynomial
        # is irreducible over Q
        n = self.norm()
        conj = self.conjugate()
        return FieldElement(self.desc, conj.c0 / n, conj.c1 / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        result = self.desc.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __str__(self):
        return format_element(self)


def format_element(e: FieldElement) -> str:
    if e.c1 == 0:
        return str(e.c0)
    sign = "+" if e.c1 > 0 else "-"
    return f"{e.c0}{sign}{abs(e.c1)}*w"


def parse_element(desc: FieldDescriptor, text: str) -> FieldElement:
    """Parse "c0+c1*w" / "c0" with rational coefficients into desc's field."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty element")
    terms = _TERM_RE.findall(s)
    if "".join(terms) != s:
        raise ParseError(f"malformed element: {text!r}")
    c0 = Fraction(0)
    c1 = Fraction(0)
    for term in terms:
        if term in ("w", "+w"):
            c1 += 1
        elif term == "-w":
            c1 -= 1
        elif term.endswith("*w"):
            c1 += parse_rational(term[:-2])
        else:
            c0 += parse_rational(term)
    if c1 != 0 and desc.degree == 1:
        raise ParseError("generator 'w' is not available in Q")
    return desc.element(c0, c1)
