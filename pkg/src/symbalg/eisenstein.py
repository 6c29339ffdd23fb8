"""Arithmetic in Z[e], the ring of integers of the cube-root-of-unity field.

Elements are a + b*e with e^2 + e + 1 = 0 and norm a^2 - a*b + b^2.  The
ring is Euclidean, so rational primes classify as split (p = 1 mod 3),
inert (p = 2 mod 3) or ramified (p = 3), and residue fields, cubic
residue symbols and pi-adic valuations are all computed exactly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .fields import QEPS, FieldElement, ParseError, parse_element
from .intmath import euler_phi, is_prime, multiplicative_order


def _round_div(num: int, den: int) -> int:
    """Nearest integer to num/den, den > 0; ties go up (deterministic)."""
    return (2 * num + den) // (2 * den)


@dataclass(frozen=True)
class EisensteinInt:
    """a + b*e with integer a, b."""

    a: int
    b: int = 0

    def _coerce(self, other):
        if isinstance(other, EisensteinInt):
            return other
        if isinstance(other, int):
            return EisensteinInt(other)
        return None

    def norm(self) -> int:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def conjugate(self) -> "EisensteinInt":
        # e -> e^2 = -1 - e
        return EisensteinInt(self.a - self.b, -self.b)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def is_associate(self, other: "EisensteinInt") -> bool:
        return any(self == other * u for u in UNITS)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return EisensteinInt(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return EisensteinInt(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return EisensteinInt(-self.a, -self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a + b e)(c + d e) = ac - bd + (ad + bc - bd) e
        a, b, c, d = self.a, self.b, o.a, o.b
        return EisensteinInt(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = EisensteinInt(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        """q, r with self = q*other + r and norm(r) < norm(other).

        The quotient rounds the exact quotient in Q(e) to nearest integers
        coefficientwise, which keeps norm(r) <= 3/4 * norm(other).
        """
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero in Z[e]")
        n = o.norm()
        t = self * o.conjugate()
        q = EisensteinInt(_round_div(t.a, n), _round_div(t.b, n))
        return q, self - q * o

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def to_field(self) -> FieldElement:
        return QEPS.element(self.a, self.b)

    def __str__(self):
        return format_eisenstein(self)


ZERO = EisensteinInt(0)
ONE = EisensteinInt(1)
EPS = EisensteinInt(0, 1)
# the six units: +-1, +-e, +-e^2
UNITS = (ONE, -ONE, EPS, -EPS, EisensteinInt(-1, -1), EisensteinInt(1, 1))


def divrem(x: EisensteinInt, y: EisensteinInt) -> tuple[EisensteinInt, EisensteinInt]:
    return divmod(x, y)


def canonical_associate(z: EisensteinInt) -> EisensteinInt:
    """The associate with a > 0 and 0 <= b < a.

    That window is a fundamental domain for multiplication by the six
    units, so the representative is unique; the lexicographic fallback
    is kept as a guard.
    """
    if z.is_zero():
        raise ValueError("zero has no canonical associate")
    associates = [z * u for u in UNITS]
    window = [t for t in associates if t.a > 0 and 0 <= t.b < t.a]
    if window:
        return min(window, key=lambda t: (t.a, t.b))
    positive = [t for t in associates if t.a > 0]
    return min(positive, key=lambda t: (t.a, t.b))


@dataclass(frozen=True)
class EisensteinPrime:
    """A classified prime of Z[e] above the rational prime p."""

    pi: EisensteinInt
    kind: str  # "split" | "inert" | "ramified"
    p: int
    conjugate: EisensteinInt | None
    abs_norm: int

    def __post_init__(self):
        if self.kind not in ("split", "inert", "ramified"):
            raise ValueError(f"unknown prime kind {self.kind!r}")
        if self.pi.norm() != self.abs_norm:
            raise ValueError("abs_norm does not match norm(pi)")
        if self.kind == "split":
            if self.p % 3 != 1 or self.abs_norm != self.p or self.conjugate is None:
                raise ValueError("inconsistent split prime data")
            if not (self.pi * self.conjugate).is_associate(EisensteinInt(self.p)):
                raise ValueError("pi * conjugate is not an associate of p")
        elif self.kind == "inert":
            if self.p % 3 != 2 or self.pi != EisensteinInt(self.p) or self.abs_norm != self.p * self.p:
                raise ValueError("inconsistent inert prime data")
        else:
            if self.p != 3 or not self.pi.is_associate(EisensteinInt(1, -1)):
                raise ValueError("inconsistent ramified prime data")

    def divides(self, z: EisensteinInt) -> bool:
        return (z % self.pi).is_zero()

    def __str__(self):
        return format_prime(self)


def _norm_equation(p: int) -> EisensteinInt:
    # one solution of a^2 - a*b + b^2 = p via the discriminant 4p - 3b^2
    for b in range(1, math.isqrt(4 * p // 3) + 1):
        disc = 4 * p - 3 * b * b
        r = math.isqrt(disc)
        if r * r == disc and (b + r) % 2 == 0:
            z = EisensteinInt((b + r) // 2, b)
            if z.norm() == p:
                return z
    raise ArithmeticError(f"no Eisenstein element of norm {p}")


@lru_cache(maxsize=None)
def factor_rational_prime(p: int) -> EisensteinPrime:
    """Classify the rational prime p in Z[e]."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 3:
        return EisensteinPrime(EisensteinInt(1, -1), "ramified", 3, None, 3)
    if p % 3 == 2:
        return EisensteinPrime(EisensteinInt(p), "inert", p, None, p * p)
    z = _norm_equation(p)
    # the two prime orbits above p both contain a window representative;
    # the lexicographically smaller one is the canonical pi
    c1 = canonical_associate(z)
    c2 = canonical_associate(z.conjugate())
    pi = min(c1, c2, key=lambda t: (t.a, t.b))
    return EisensteinPrime(pi, "split", p, pi.conjugate(), p)


def conjugate_prime(prime: EisensteinPrime) -> EisensteinPrime:
    """The other prime above a split p (identity for inert and ramified)."""
    if prime.kind != "split":
        return prime
    pi = canonical_associate(prime.pi.conjugate())
    return EisensteinPrime(pi, "split", prime.p, pi.conjugate(), prime.p)


@dataclass(frozen=True)
class ResidueField:
    """Z[e]/pi as F_p (eps_image a primitive cube root, or 1 when p = 3)
    or as F_p[t]/(t^2 + t + 1) with elements stored as (c0, c1) pairs."""

    char: int
    degree: int
    eps_image: int | tuple[int, int]

    def __post_init__(self):
        e = self.eps_image
        if self.degree == 1:
            assert (e * e + e + 1) % self.char == 0
        else:
            t = self.mul(e, e)
            assert self.add(self.add(t, e), self.one) == self.zero

    @property
    def size(self) -> int:
        return self.char ** self.degree

    @property
    def zero(self):
        return 0 if self.degree == 1 else (0, 0)

    @property
    def one(self):
        return 1 if self.degree == 1 else (1, 0)

    def reduce(self, z: EisensteinInt):
        if self.degree == 1:
            return (z.a + z.b * self.eps_image) % self.char
        return (z.a % self.char, z.b % self.char)

    def add(self, x, y):
        if self.degree == 1:
            return (x + y) % self.char
        return ((x[0] + y[0]) % self.char, (x[1] + y[1]) % self.char)

    def mul(self, x, y):
        if self.degree == 1:
            return x * y % self.char
        # t^2 = -1 - t
        p = self.char
        a0, a1 = x
        b0, b1 = y
        return ((a0 * b0 - a1 * b1) % p, (a0 * b1 + a1 * b0 - a1 * b1) % p)

    def pow(self, x, k: int):
        if self.degree == 1:
            return pow(x, k, self.char)
        result = self.one
        base = x
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def elements(self):
        if self.degree == 1:
            yield from range(self.char)
        else:
            for c0 in range(self.char):
                for c1 in range(self.char):
                    yield (c0, c1)


@lru_cache(maxsize=None)
def residue_field(prime: EisensteinPrime) -> ResidueField:
    if prime.kind == "split":
        a, b = prime.pi.a, prime.pi.b
        # b is invertible mod p, else p would divide pi and norm(pi) = p^2
        b_inv = pow(b % prime.p, prime.p - 2, prime.p)
        return ResidueField(prime.p, 1, (-a * b_inv) % prime.p)
    if prime.kind == "inert":
        return ResidueField(prime.p, 2, (0, 1))
    return ResidueField(3, 1, 1)


@dataclass(frozen=True)
class CubicSymbol:
    """Value of the cubic residue character: zero or e^k, k in {0, 1, 2}."""

    k: int | None  # None encodes the divisible (zero) case

    @classmethod
    def zero(cls) -> "CubicSymbol":
        return cls(None)

    @classmethod
    def root(cls, k: int) -> "CubicSymbol":
        return cls(k % 3)

    @property
    def is_zero(self) -> bool:
        return self.k is None

    @property
    def is_trivial(self) -> bool:
        return self.k == 0

    def __mul__(self, other: "CubicSymbol") -> "CubicSymbol":
        if self.k is None or other.k is None:
            return CubicSymbol(None)
        return CubicSymbol((self.k + other.k) % 3)

    def __str__(self):
        return "zero" if self.k is None else f"eps^{self.k}"


def cubic_residue_symbol(alpha: EisensteinInt, prime: EisensteinPrime) -> CubicSymbol:
    """alpha^((N(pi) - 1)/3) mod pi, identified as a power of the cube root.

    Undefined at the ramified prime, where (N(pi) - 1)/3 is not integral.
    """
    if prime.kind == "ramified":
        raise ValueError("cubic residue symbol is undefined at the ramified prime")
    field = residue_field(prime)
    abar = field.reduce(alpha)
    if abar == field.zero:
        return CubicSymbol.zero()
    value = field.pow(abar, (prime.abs_norm - 1) // 3)
    for k in range(3):
        if value == field.pow(field.eps_image, k):
            return CubicSymbol.root(k)
    raise ArithmeticError("character value is not a cube root of unity")


def valuation(num: EisensteinInt, prime: EisensteinPrime, den: EisensteinInt = ONE) -> int:
    """Exact pi-adic valuation of num/den (valuation of numerator minus
    valuation of denominator), via repeated exact-division tests."""
    if num.is_zero() or den.is_zero():
        raise ValueError("valuation of zero is undefined")
    return _division_count(num, prime.pi) - _division_count(den, prime.pi)


def _division_count(z: EisensteinInt, pi: EisensteinInt) -> int:
    count = 0
    while True:
        q, r = divmod(z, pi)
        if not r.is_zero():
            return count
        z = q
        count += 1


@dataclass(frozen=True)
class SplittingData:
    """Ramification index, residual degree and prime count; e*f*g = 3."""

    e: int
    f: int
    g: int


def splitting_in_kummer(alpha: EisensteinInt, prime: EisensteinPrime) -> SplittingData:
    """How prime behaves in the degree-3 Kummer extension adjoining a cube
    root of alpha: ramifies when the symbol vanishes, stays prime when it
    is a primitive cube root, splits completely when it is 1."""
    symbol = cubic_residue_symbol(alpha, prime)
    if symbol.is_zero:
        return SplittingData(3, 1, 1)
    if symbol.is_trivial:
        return SplittingData(1, 1, 3)
    return SplittingData(1, 3, 1)


def cyclotomic_splitting(p: int, l: int) -> tuple[int, int]:
    """(f, r) for p in the l-th cyclotomic ring: f is the multiplicative
    order of p mod l and r = phi(l)/f is the number of primes above p."""
    if l < 3:
        raise ValueError("l must be at least 3")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if l % p == 0:
        raise ValueError("p must not divide l")
    f = multiplicative_order(p, l)
    return f, euler_phi(l) // f


def format_eisenstein(z: EisensteinInt) -> str:
    if z.b == 0:
        return str(z.a)
    sign = "+" if z.b > 0 else "-"
    return f"{z.a}{sign}{abs(z.b)}*w"


def format_prime(prime: EisensteinPrime) -> str:
    return f"{prime.kind}({format_eisenstein(prime.pi)} | N={prime.abs_norm})"


def parse_eisenstein(text: str) -> EisensteinInt:
    e = parse_element(QEPS, text)
    if e.c0.denominator != 1 or e.c1.denominator != 1:
        raise ParseError(f"Eisenstein integers need integer coefficients: {text!r}")
    return EisensteinInt(int(e.c0), int(e.c1))


def parse_eisenstein_fraction(text: str) -> tuple[EisensteinInt, EisensteinInt]:
    """Parse "a+b*w" or "a+b*w/c+d*w" into a numerator/denominator pair."""
    parts = text.split("/")
    if len(parts) == 1:
        return parse_eisenstein(parts[0]), ONE
    if len(parts) == 2:
        den = parse_eisenstein(parts[1])
        if den.is_zero():
            raise ParseError("zero denominator")
        return parse_eisenstein(parts[0]), den
    raise ParseError(f"malformed fraction: {text!r}")
