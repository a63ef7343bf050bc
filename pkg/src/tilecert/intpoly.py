"""Exact integer polynomial arithmetic and cyclotomic polynomials.

A polynomial is stored as a dense tuple of integer coefficients indexed
by exponent: ``IntPoly([1, 0, 1])`` is 1 + x**2.  The canonical form has
no trailing zero coefficient and the zero polynomial is the empty tuple,
so ``degree()`` returns None only for zero.  Coefficients are Python
ints and therefore never overflow; this matters because cyclotomic
coefficients do eventually exceed 1 in magnitude (the 105th cyclotomic
polynomial is the first with a coefficient of -2).

Values are immutable and all operations are pure, so they can be used
freely from concurrent workers.  The cyclotomic cache is an lru_cache,
which is safe for concurrent read/insert under CPython.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .arith import divisors, euler_phi, prime_power


@dataclass(init=False, frozen=True)
class IntPoly:
    """Dense integer polynomial; ``coeffs[i]`` is the coefficient of x**i."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls(())

    @classmethod
    def one(cls) -> "IntPoly":
        return cls((1,))

    @classmethod
    def x_pow(cls, n: int) -> "IntPoly":
        """The monomial x**n."""
        if n < 0:
            raise ValueError("exponent must be nonnegative")
        return cls([0] * n + [1])

    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def nonzero_terms(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, x: int) -> int:
        """Evaluate at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly(())
        out = [0] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            if c:
                for j, d in enumerate(b):
                    out[i + j] += c * d
        return IntPoly(out)

    __rmul__ = __mul__

    def divrem(self, divisor: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Long division by a monic divisor: self = divisor*quot + rem.

        The divisor must be monic and nonzero (every cyclotomic divisor
        is), which keeps the division exact over the integers; the
        remainder has degree strictly below the divisor's.
        """
        if not divisor.is_monic():
            raise ValueError("divisor must be monic and nonzero")
        dq = len(divisor.coeffs) - 1
        rem = list(self.coeffs)
        if len(rem) <= dq:
            return IntPoly(()), self
        quot = [0] * (len(rem) - dq)
        dcs = divisor.coeffs
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c:
                quot[i - dq] = c
                base = i - dq
                for j in range(dq):
                    rem[base + j] -= c * dcs[j]
                rem[i] = 0
        return IntPoly(quot), IntPoly(rem[:dq])

    def __divmod__(self, divisor: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        return self.divrem(divisor)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = " + " if (c > 0 and parts) else " - " if (c < 0 and parts) else "" if c > 0 else "-"
            mag = abs(c)
            term = "" if i == 0 else "x" if i == 1 else f"x^{i}"
            coeff = str(mag) if (mag != 1 or i == 0) else ""
            parts.append(sign + coeff + term)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"IntPoly('{self}')"


def x_pow_minus_one(n: int) -> IntPoly:
    """The polynomial x**n - 1 for n >= 1."""
    if n < 1:
        raise ValueError("n must be positive")
    return IntPoly([-1] + [0] * (n - 1) + [1])


@lru_cache(maxsize=None)
def cyclotomic(s: int) -> IntPoly:
    """The s-th cyclotomic polynomial, for s >= 1.

    Computed by dividing x**s - 1 exactly by the cyclotomic polynomials
    of all proper divisors of s; results are memoized, so repeated use
    costs one dict lookup.
    """
    if s < 1:
        raise ValueError("cyclotomic index must be >= 1")
    poly = x_pow_minus_one(s)
    for d in divisors(s):
        if d == s:
            continue
        poly, rem = poly.divrem(cyclotomic(d))
        assert rem.is_zero()
    return poly


def cyclotomic_at_one(s: int) -> int:
    """Value of the s-th cyclotomic polynomial at 1, from the factorization of s.

    0 for s = 1, p when s is a power of the prime p, and 1 otherwise.
    """
    if s < 1:
        raise ValueError("cyclotomic index must be >= 1")
    if s == 1:
        return 0
    pp = prime_power(s)
    return pp[0] if pp else 1


def divides_cyclotomic(p: IntPoly, s: int) -> bool:
    """True iff the s-th cyclotomic polynomial divides p (p nonzero)."""
    if s < 1:
        raise ValueError("cyclotomic index must be >= 1")
    if p.is_zero():
        raise ValueError("dividend must be nonzero")
    deg = p.degree()
    assert deg is not None
    if euler_phi(s) > deg:
        return False
    _, rem = p.divrem(cyclotomic(s))
    return rem.is_zero()
