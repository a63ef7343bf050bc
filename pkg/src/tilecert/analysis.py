"""Power sums of polynomial roots, Ramanujan sums, and the prime-power
cyclotomic pattern.

For a monic integer polynomial of degree M with coefficients b_0..b_M,
Newton's identities give the power sums S_j of its roots exactly:

    S_j + b_{M-1}*S_{j-1} + ... + b_{M-j+1}*S_1 + j*b_{M-j} = 0   (j <= M)
    S_j + b_{M-1}*S_{j-1} + ... + b_0*S_{j-M}           = 0   (j > M)

The j > M line is the standard homogeneous extension, needed to compare
against independent oracles beyond the degree.  One such oracle is the
Ramanujan sum c_s(j), the sum of j-th powers of the primitive s-th roots
of unity, computed exactly from the Moebius function:

    c_s(j) = sum over d | gcd(j, s) of d * mu(s / d).

The classifier at the bottom recognizes arithmetic progressions
{0, t, 2t, ..., (p-1)t} with p prime and t a power of p -- exactly the
sets whose characteristic polynomial is a prime-power cyclotomic
polynomial, of index p**alpha with t = p**(alpha-1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import divisors, is_prime, mobius
from .intpoly import IntPoly
from .tileset import IntSet


@dataclass(frozen=True)
class PowerSumSeries:
    """Exact power sums S_1, ..., S_count of the roots of a monic polynomial."""

    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, j: int) -> int:
        """S_j for 1 <= j <= count (1-based, matching the subscript)."""
        if not 1 <= j <= len(self.values):
            raise IndexError(f"S_{j} not computed")
        return self.values[j - 1]


def power_sums(p: IntPoly, count: int) -> PowerSumSeries:
    """S_1..S_count for a monic polynomial of degree >= 1, via Newton's identities."""
    if not p.is_monic() or len(p.coeffs) < 2:
        raise ValueError("polynomial must be monic of degree >= 1")
    if count < 1:
        raise ValueError("count must be positive")
    b = p.coeffs
    deg = len(b) - 1
    sums: list[int] = []
    for j in range(1, count + 1):
        acc = j * b[deg - j] if j <= deg else 0
        for i in range(1, min(j, deg + 1)):
            if j - i >= 1:
                acc += b[deg - i] * sums[j - i - 1]
        sums.append(-acc)
    return PowerSumSeries(tuple(sums))


def ramanujan_sum(s: int, j: int) -> int:
    """The Ramanujan sum c_s(j), exact for any integer j and s >= 1."""
    if s < 1:
        raise ValueError("s must be positive")
    g = math.gcd(abs(j), s)
    return sum(d * mobius(s // d) for d in divisors(g))


def classify_prime_power_cyclotomic(a: IntSet) -> tuple[int, int] | None:
    """Recognize {0, t, 2t, ..., (p-1)t} with p prime, t = p**(alpha-1).

    The set is normalized (minimum translated to 0) first.  Returns
    (p, alpha) when the set matches -- equivalently, when its
    characteristic polynomial is the cyclotomic polynomial of index
    p**alpha -- and None otherwise.
    """
    elems = a.normalized().elements
    p = len(elems)
    if not is_prime(p):
        return None
    t = elems[1]
    if any(elems[k] != k * t for k in range(p)):
        return None
    alpha = 1
    step = t
    while step % p == 0:
        step //= p
        alpha += 1
    if step != 1:
        return None
    return (p, alpha)
