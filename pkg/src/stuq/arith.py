"""Small number-theoretic helpers shared across modules."""

from __future__ import annotations


def divisors(n: int) -> list[int]:
    """Positive divisors of n != 0 in increasing order."""
    n = abs(n)
    if n == 0:
        raise ValueError("divisors of 0 are unbounded")
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def mobius(n: int) -> int:
    """Moebius function of n >= 1."""
    if n < 1:
        raise ValueError("mobius needs n >= 1")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result
