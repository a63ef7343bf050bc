"""Small exact number-theory helpers shared across the package.

Everything here is plain trial-division arithmetic: the whole toolkit
operates at desk scale, where inputs fit comfortably below 10**7.
"""

from __future__ import annotations

import math
from functools import lru_cache


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as (prime, exponent) pairs, ascending."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out: list[tuple[int, int]] = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1, ascending."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Euler's totient of n >= 1."""
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def mobius(n: int) -> int:
    """Moebius function: 0 on non-squarefree n, else (-1)**(number of primes)."""
    result = 1
    for _, e in factorize(n):
        if e > 1:
            return 0
        result = -result
    return result


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == [(n, 1)]


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (p, a) with n = p**a when n >= 2 is a prime power, else None."""
    if n < 2:
        return None
    fac = factorize(n)
    return fac[0] if len(fac) == 1 else None


def lcm_all(values) -> int:
    """lcm of an iterable of positive integers; 1 for an empty iterable."""
    return math.lcm(*values)
