"""Split/division classification of degree-3 cyclic algebras over the
completion of the cube-root-of-unity field at an unramified prime.

For data (alpha, beta, pi) with pi a split or inert prime above p > 3 and
pi not dividing alpha, the cube-root extension adjoining alpha^(1/3) is
unramified of residual degree f read off the cubic residue symbol, and
beta = pi^m * unit is a local norm exactly when f divides m.  The verdict
is division exactly when beta is not a norm; otherwise the algebra is a
matrix algebra.  The Frobenius exponent m mod f plays the role of the
local Artin symbol: the identity iff beta is a norm.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .eisenstein import (
    ONE,
    EisensteinInt,
    EisensteinPrime,
    SplittingData,
    cubic_residue_symbol,
    factor_rational_prime,
    format_eisenstein,
    splitting_in_kummer,
    valuation,
)
from .intmath import is_prime


@dataclass(frozen=True)
class LocalAlgebraSpec:
    """(alpha, beta / K_pi, e) with beta given as an exact fraction."""

    alpha: EisensteinInt
    beta_num: EisensteinInt
    beta_den: EisensteinInt
    prime: EisensteinPrime

    def __post_init__(self):
        if self.prime.kind not in ("split", "inert"):
            raise ValueError("the prime must be split or inert (p > 3)")
        if self.prime.p <= 3:
            raise ValueError("the underlying rational prime must exceed 3")
        if self.beta_num.is_zero() or self.beta_den.is_zero():
            raise ValueError("beta must be a nonzero fraction")
        if self.prime.divides(self.alpha):
            raise ValueError("pi divides alpha: the cube-root extension ramifies")


def residual_degree(alpha: EisensteinInt, prime: EisensteinPrime) -> tuple[int, SplittingData]:
    """f of the cube-root extension at pi: 3 when the cubic symbol is a
    primitive root, 1 when it is trivial."""
    if prime.kind == "ramified":
        raise ValueError("the ramified prime is out of scope")
    if prime.divides(alpha):
        raise ValueError("pi divides alpha: the cube-root extension ramifies")
    data = splitting_in_kummer(alpha, prime)
    return data.f, data


@dataclass(frozen=True)
class NormCertificate:
    f: int        # residual degree, 1 or 3
    m: int        # pi-adic valuation of beta
    divides: bool  # f | m, i.e. beta is a local norm


@dataclass(frozen=True)
class ArtinSymbolResult:
    f: int
    exponent: int  # Frobenius power m mod f; 0 means the identity


@dataclass(frozen=True)
class Verdict:
    outcome: str  # "split" | "division"
    certificate: NormCertificate


def is_norm(spec: LocalAlgebraSpec) -> NormCertificate:
    f, _ = residual_degree(spec.alpha, spec.prime)
    m = valuation(spec.beta_num, spec.prime, spec.beta_den)
    return NormCertificate(f, m, m % f == 0)


def artin_symbol(spec: LocalAlgebraSpec) -> ArtinSymbolResult:
    cert = is_norm(spec)
    return ArtinSymbolResult(cert.f, cert.m % cert.f)


def classify(spec: LocalAlgebraSpec) -> Verdict:
    cert = is_norm(spec)
    return Verdict("split" if cert.divides else "division", cert)


def classify_report(spec: LocalAlgebraSpec, case: str = "general") -> dict:
    """JSON-ready report for a spec; the honest symbol value is included
    so inert primes with non-rational alpha stay visible."""
    symbol = cubic_residue_symbol(spec.alpha, spec.prime)
    f, data = residual_degree(spec.alpha, spec.prime)
    verdict = classify(spec)
    artin = artin_symbol(spec)
    return {
        "verdict": verdict.outcome,
        "f": f,
        "m": verdict.certificate.m,
        "artin_exponent": artin.exponent,
        "efg": [data.e, data.f, data.g],
        "case": case,
        "symbol": str(symbol),
    }


def power_spec(alpha: EisensteinInt, p: int, l: int) -> LocalAlgebraSpec:
    """The spec (alpha, p^(3l)) at the canonical prime above p."""
    if l < 1:
        raise ValueError("l must be a positive integer")
    prime = factor_rational_prime(p)
    return LocalAlgebraSpec(alpha, EisensteinInt(p) ** (3 * l), ONE, prime)


def report_inert_prime_power(alpha: int, p: int, l: int) -> dict:
    """Report for rational alpha at an inert prime with beta = p^(3l).

    The cube-root extension is trivial there (rational alpha always has
    trivial cubic symbol at an inert prime), so beta is a norm and the
    Artin exponent vanishes.
    """
    if not is_prime(p) or p % 3 != 2 or p <= 3:
        raise ValueError("p must be a prime congruent to 2 mod 3 and exceed 3")
    if math.gcd(alpha, p) != 1:
        raise ValueError("alpha must be coprime to p")
    spec = power_spec(EisensteinInt(alpha), p, l)
    report = classify_report(spec, case="3.2")
    assert report["symbol"] == "eps^0" and report["f"] == 1
    assert report["verdict"] == "split" and report["artin_exponent"] == 0
    return report


def report_split_prime_power(alpha: EisensteinInt, p: int, l: int) -> dict:
    """Report for alpha at the canonical prime above a split p with
    beta = p^(3l); the cubic symbol selects the inert-extension case
    (f = 3) or the totally split one (f = 1), and both classify split."""
    if not is_prime(p) or p % 3 != 1:
        raise ValueError("p must be a prime congruent to 1 mod 3")
    spec = power_spec(alpha, p, l)
    symbol = cubic_residue_symbol(spec.alpha, spec.prime)
    report = classify_report(spec, case="3.3-2" if symbol.is_trivial else "3.3-1")
    assert report["verdict"] == "split" and report["artin_exponent"] == 0
    return report


def beta_description(spec: LocalAlgebraSpec) -> str:
    if spec.beta_den == ONE:
        return format_eisenstein(spec.beta_num)
    return f"{format_eisenstein(spec.beta_num)}/{format_eisenstein(spec.beta_den)}"
