"""Finite sets of nonnegative integers and the Coven-Meyerowitz conditions.

A candidate tile is a finite set A of at least two nonnegative integers.
Its characteristic polynomial is the 0/1 polynomial whose exponents are
exactly the elements of A.  The cyclotomic divisor inventory collects
every index s >= 2 whose cyclotomic polynomial divides that polynomial;
the prime-power subset of the inventory drives the two Coven-Meyerowitz
conditions:

  (T1)  #A equals the product, over prime powers s in the inventory, of
        the cyclotomic polynomial's value at 1 (i.e. of the primes);
  (T2)  for prime powers s1, ..., sk in the inventory with pairwise
        distinct primes, the cyclotomic polynomial of index s1*...*sk
        also divides the characteristic polynomial.

Both conditions, the inventory, and tiling itself are invariant under
translating the set, so predicates normalize the minimum to 0 first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .arith import euler_phi, prime_power
from .intpoly import IntPoly, cyclotomic_at_one, divides_cyclotomic


@dataclass(init=False, frozen=True)
class IntSet:
    """A finite set of >= 2 nonnegative integers, kept sorted."""

    elements: tuple[int, ...]

    def __init__(self, elements: Iterable[int]):
        elems = sorted(elements)
        if len(elems) < 2:
            raise ValueError("a tile candidate needs at least two elements")
        if elems[0] < 0:
            raise ValueError("elements must be nonnegative")
        if any(a == b for a, b in zip(elems, elems[1:])):
            raise ValueError("elements must be distinct")
        object.__setattr__(self, "elements", tuple(elems))

    @classmethod
    def parse(cls, text: str) -> "IntSet":
        """Parse a comma-separated list of nonnegative integers."""
        try:
            values = [int(tok) for tok in text.split(",") if tok.strip() != ""]
        except ValueError as exc:
            raise ValueError(f"bad set literal {text!r}") from exc
        return cls(values)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def offset(self) -> int:
        """The minimum element, retained so reports can show the raw input."""
        return self.elements[0]

    def normalized(self) -> "IntSet":
        """Translate so the minimum element becomes 0."""
        if self.elements[0] == 0:
            return self
        m = self.elements[0]
        return IntSet(x - m for x in self.elements)

    def shifted(self, k: int) -> "IntSet":
        return IntSet(x + k for x in self.elements)

    def __str__(self) -> str:
        return "{" + ",".join(str(x) for x in self.elements) + "}"


@dataclass(frozen=True)
class CycloDivisors:
    """Cyclotomic divisor inventory of a characteristic polynomial.

    ``indices`` holds every s >= 2 whose cyclotomic polynomial divides
    the polynomial; ``prime_powers`` is the subset of prime powers and
    ``by_prime`` groups those by prime.
    """

    indices: tuple[int, ...]
    prime_powers: tuple[int, ...]
    by_prime: dict[int, tuple[int, ...]]


def char_poly(a: IntSet) -> IntPoly:
    """The 0/1 characteristic polynomial with exponent set a."""
    coeffs = [0] * (a.elements[-1] + 1)
    for x in a.elements:
        coeffs[x] = 1
    return IntPoly(coeffs)


def cyclotomic_divisor_indices(p: IntPoly) -> list[int]:
    """All s >= 2 whose cyclotomic polynomial divides the nonzero polynomial p.

    Candidates are bounded by the degree: a divisor of index s has degree
    phi(s) <= deg p, and phi(s) > sqrt(s/2) for s >= 2, so scanning
    s <= 2*deg**2 + 1 and filtering on phi(s) <= deg is exhaustive.
    """
    deg = p.degree()
    if deg is None:
        raise ValueError("polynomial must be nonzero")
    found = []
    for s in range(2, 2 * deg * deg + 2):
        if euler_phi(s) <= deg and divides_cyclotomic(p, s):
            found.append(s)
    return found


def divisors_of_poly(p: IntPoly) -> CycloDivisors:
    """Cyclotomic divisor inventory of an arbitrary nonzero polynomial."""
    indices = cyclotomic_divisor_indices(p)
    powers = []
    by_prime: dict[int, list[int]] = {}
    for s in indices:
        pp = prime_power(s)
        if pp is not None:
            powers.append(s)
            by_prime.setdefault(pp[0], []).append(s)
    return CycloDivisors(
        indices=tuple(indices),
        prime_powers=tuple(powers),
        by_prime={q: tuple(v) for q, v in sorted(by_prime.items())},
    )


@lru_cache(maxsize=65536)
def cyclotomic_divisors(a: IntSet) -> CycloDivisors:
    """Cyclotomic divisor inventory of the set's characteristic polynomial.

    Memoized: the tiling, condition, and spectrum pipelines all consult
    the same inventory for the same set.
    """
    return divisors_of_poly(char_poly(a.normalized()))


def check_t1(a: IntSet) -> bool:
    """Condition (T1): #A equals the product of primes over the prime-power inventory."""
    product = 1
    for s in cyclotomic_divisors(a).prime_powers:
        product *= cyclotomic_at_one(s)
    return product == a.size


def check_t2(a: IntSet) -> bool:
    """Condition (T2): cross-prime products of inventory prime powers also divide.

    Enumerates every combination that picks at most one prime power per
    prime and involves at least two distinct primes; the number of
    distinct primes is tiny at desk scale, so direct enumeration is fine.
    """
    inv = cyclotomic_divisors(a)
    poly = char_poly(a.normalized())
    prime_groups = list(inv.by_prime.values())
    for k in range(2, len(prime_groups) + 1):
        for groups in itertools.combinations(prime_groups, k):
            for combo in itertools.product(*groups):
                q = 1
                for s in combo:
                    q *= s
                if not divides_cyclotomic(poly, q):
                    return False
    return True
