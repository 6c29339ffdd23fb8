"""Small integer number theory helpers (desk scale, trial division)."""

from __future__ import annotations

import math


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_below(bound: int) -> list[int]:
    return [n for n in range(2, bound) if is_prime(n)]


def euler_phi(n: int) -> int:
    if n < 1:
        raise ValueError("euler_phi needs n >= 1")
    result = n
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            while m % d == 0:
                m //= d
            result -= result // d
        d += 1
    if m > 1:
        result -= result // m
    return result


def multiplicative_order(a: int, n: int) -> int:
    if n < 2 or math.gcd(a, n) != 1:
        raise ValueError("multiplicative order needs gcd(a, n) = 1 and n >= 2")
    x = a % n
    order = 1
    while x != 1:
        x = x * a % n
        order += 1
    return order
