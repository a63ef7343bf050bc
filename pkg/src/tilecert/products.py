"""Products of arithmetic-progression polynomials and the tower condition.

A product spec is a list of pairs (m_i, n_i), each describing the factor

    1 + x**m_i + x**(2*m_i) + ... + x**((n_i - 1)*m_i)
      = (x**(m_i*n_i) - 1) / (x**m_i - 1),

the characteristic polynomial of the progression {0, m_i, ..., (n_i-1)*m_i}.
Whether the expanded product tiles the integers is decided by the tower
condition: some ordering of the factors satisfies, for every position k,

    n_k divides gcd( m_j / gcd(m_k, m_j) : j after k ).

When the tower condition fails for every ordering, a witness vector can
be extracted that violates Keller's cube-tiling property for the lattice
W = {w : sum_i w_i * m_i = 0}: a nonzero w in W such that no coordinate
of (w_1/n_1, ..., w_N/n_N) is a nonzero integer.  Keller's theorem makes
such a vector a certificate of non-tiling, independent of any search.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .intpoly import IntPoly
from .tileset import IntSet

MAX_FACTORS = 8


@dataclass(init=False, frozen=True)
class ProductSpec:
    """Factors (m_i, n_i) with m_i >= 1 and n_i >= 2.

    Pairwise gcds d_ij = gcd(m_i, m_j) are recomputed on demand, never
    stored, so they cannot go stale.
    """

    factors: tuple[tuple[int, int], ...]

    def __init__(self, factors: Iterable[tuple[int, int]]):
        fs = tuple((int(m), int(n)) for m, n in factors)
        if not fs:
            raise ValueError("need at least one factor")
        if any(m < 1 for m, _ in fs):
            raise ValueError("every step m must be >= 1")
        if any(n < 2 for _, n in fs):
            raise ValueError("every length n must be >= 2")
        object.__setattr__(self, "factors", fs)

    @classmethod
    def parse(cls, text: str) -> "ProductSpec":
        """Parse a spec literal such as "1:2,3:2"."""
        factors = []
        for tok in text.split(","):
            tok = tok.strip()
            if not tok:
                continue
            parts = tok.split(":")
            if len(parts) != 2:
                raise ValueError(f"bad factor {tok!r}, expected m:n")
            try:
                factors.append((int(parts[0]), int(parts[1])))
            except ValueError as exc:
                raise ValueError(f"bad factor {tok!r}") from exc
        return cls(factors)

    @property
    def steps(self) -> tuple[int, ...]:
        return tuple(m for m, _ in self.factors)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(n for _, n in self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def __str__(self) -> str:
        return ",".join(f"{m}:{n}" for m, n in self.factors)


@dataclass(frozen=True)
class KellerWitness:
    """A vector violating Keller's property for the step lattice."""

    vector: tuple[int, ...]


def factor_poly(m: int, n: int) -> IntPoly:
    """The progression polynomial 1 + x**m + ... + x**((n-1)*m)."""
    coeffs = [0] * (m * (n - 1) + 1)
    for k in range(n):
        coeffs[k * m] = 1
    return IntPoly(coeffs)


def product_poly(spec: ProductSpec) -> IntPoly:
    """Exact expanded product of all factors."""
    out = IntPoly.one()
    for m, n in spec.factors:
        out = out * factor_poly(m, n)
    return out


def is_zero_one(p: IntPoly) -> bool:
    """True iff every coefficient is 0 or 1."""
    return all(c in (0, 1) for c in p.coeffs)


def product_set(spec: ProductSpec) -> IntSet | None:
    """The exponent set of the product, when the product is 0/1; else None."""
    p = product_poly(spec)
    if not is_zero_one(p):
        return None
    return IntSet(i for i, c in enumerate(p.coeffs) if c)


def normalize_gcd(spec: ProductSpec) -> ProductSpec:
    """Divide every step by the gcd of all steps.

    Tiling, both Coven-Meyerowitz conditions, and the tower condition
    are invariant under this contraction.
    """
    g = math.gcd(*spec.steps)
    if g == 1:
        return spec
    return ProductSpec((m // g, n) for m, n in spec.factors)


def _first_ok(spec: ProductSpec, i: int, rest: Sequence[int]) -> bool:
    # n_i must divide m_j / gcd(m_i, m_j) for every other remaining factor j.
    m, n = spec.factors[i]
    return all(
        spec.factors[j][0] // math.gcd(m, spec.factors[j][0]) % n == 0
        for j in rest
        if j != i
    )


def tower_condition(spec: ProductSpec) -> tuple[int, ...] | None:
    """First factor ordering (as 0-based indices) satisfying the tower chain.

    Orderings are tried in lexicographic index order, so the result is
    deterministic.  None means the chain fails for every ordering.
    """
    n = len(spec)
    if n > MAX_FACTORS:
        raise ValueError(f"at most {MAX_FACTORS} factors supported")
    for perm in itertools.permutations(range(n)):
        if all(_first_ok(spec, perm[k], perm[k + 1:]) for k in range(n - 1)):
            return perm
    return None


def two_factor_condition(spec: ProductSpec) -> bool:
    """For exactly two factors: n_1 | m_2/d or n_2 | m_1/d, with d = gcd(m_1, m_2)."""
    if len(spec) != 2:
        raise ValueError("two-factor condition needs exactly two factors")
    (m1, n1), (m2, n2) = spec.factors
    d = math.gcd(m1, m2)
    return (m2 // d) % n1 == 0 or (m1 // d) % n2 == 0


def _pair_vector(spec: ProductSpec, i: int, j: int) -> list[int]:
    # Coordinate i gets m_j/d_ij, coordinate j gets -m_i/d_ij, zeros elsewhere;
    # by construction the dot product with the step vector is 0.
    mi, mj = spec.factors[i][0], spec.factors[j][0]
    d = math.gcd(mi, mj)
    vec = [0] * len(spec)
    vec[i] = mj // d
    vec[j] = -(mi // d)
    return vec


def w_basis(spec: ProductSpec) -> list[tuple[int, ...]]:
    """Generators of the lattice {w : <w, steps> = 0}: all pair vectors i < j."""
    n = len(spec)
    return [tuple(_pair_vector(spec, i, j)) for i in range(n) for j in range(i + 1, n)]


def check_keller_violation(spec: ProductSpec, vector: Sequence[int]) -> bool:
    """True iff the vector certifies a Keller-property violation.

    Requirements: nonzero, orthogonal to the step vector, and for every
    coordinate either w_i = 0 or n_i does not divide w_i (so scaling by
    1/n_i leaves no coordinate in Z minus {0}).
    """
    vec = tuple(vector)
    if len(vec) != len(spec) or not any(vec):
        return False
    if sum(w * m for w, m in zip(vec, spec.steps)) != 0:
        return False
    return all(w == 0 or w % n != 0 for w, n in zip(vec, spec.lengths))


def keller_violation_witness(spec: ProductSpec) -> KellerWitness | None:
    """None when the tower condition holds; otherwise a violation witness.

    The construction follows the failure structure of the tower chain.
    Factors for which every remaining ordering is already doomed are
    peeled off one at a time (any witness on the remaining coordinates
    is a witness for the whole spec, with zeros elsewhere).  Once no
    factor can head an ordering, every remaining i has a partner
    sigma(i) with n_i not dividing m_sigma(i)/d, and following sigma
    yields a cycle i_1, ..., i_r.  If some consecutive pair also fails
    the reverse divisibility, its pair vector alone is a witness;
    otherwise the sum of the pair vectors around the cycle is.
    """
    if tower_condition(spec) is not None:
        return None
    active = list(range(len(spec)))
    while True:
        head = next((i for i in active if _first_ok(spec, i, active)), None)
        if head is None:
            break
        # The tower fails overall, so it also fails on the rest after
        # removing any valid head; recurse by shrinking the active set.
        active.remove(head)

    def fails(i: int, j: int) -> bool:
        mi, mj = spec.factors[i][0], spec.factors[j][0]
        return (mj // math.gcd(mi, mj)) % spec.factors[i][1] != 0

    sigma = {}
    for i in active:
        sigma[i] = next(j for j in active if j != i and fails(i, j))
    path = [active[0]]
    seen = {active[0]: 0}
    while sigma[path[-1]] not in seen:
        nxt = sigma[path[-1]]
        seen[nxt] = len(path)
        path.append(nxt)
    cycle = path[seen[sigma[path[-1]]]:]
    r = len(cycle)
    vec: list[int] | None = None
    for j in range(r):
        i1, i2 = cycle[j], cycle[(j + 1) % r]
        if fails(i2, i1):
            vec = _pair_vector(spec, i1, i2)
            break
    if vec is None:
        vec = [0] * len(spec)
        for j in range(r):
            pair = _pair_vector(spec, cycle[j], cycle[(j + 1) % r])
            vec = [a + b for a, b in zip(vec, pair)]
    assert check_keller_violation(spec, vec), "witness construction failed"
    return KellerWitness(tuple(vec))
