"""Decide whether a finite set tiles the integers, with explicit certificates.

Every tiling of the integers by a finite set is periodic, so tiling is
equivalent to the existence of a period M and a complement set B inside
{0, ..., M-1} such that the sums a + b hit every residue class mod M
exactly once.  Granville's bound makes the period search finite: if A
tiles at all, it admits a tiling whose period divides

    L = lcm{ s : the s-th cyclotomic polynomial divides A(x) }.

The searcher therefore walks the divisors of L in increasing order and
runs an exact-cover backtracking search per period; a returned None is
sound because of that bound.  A separate brute-force searcher over an
explicit period range exists as an independent cross-check oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .arith import divisors, lcm_all
from .tileset import IntSet, cyclotomic_divisors


class PeriodCapExceeded(RuntimeError):
    """Raised when the period bound L exceeds the configured cap.

    Callers that set a cap treat this as "undecided": the search was not
    run to completion, so neither tiling nor non-tiling is certified.
    """

    def __init__(self, bound: int, cap: int):
        super().__init__(f"period bound {bound} exceeds cap {cap}")
        self.bound = bound
        self.cap = cap


@dataclass(init=False, frozen=True)
class TilingCertificate:
    """A period M and complement B with A + B covering Z mod M exactly once."""

    period: int
    complement: tuple[int, ...]

    def __init__(self, period: int, complement: Iterable[int]):
        comp = tuple(sorted(complement))
        if period < 1:
            raise ValueError("period must be positive")
        if not comp:
            raise ValueError("complement must be nonempty")
        if comp[0] < 0 or comp[-1] >= period:
            raise ValueError("complement entries must lie in [0, period)")
        if len(set(comp)) != len(comp):
            raise ValueError("complement entries must be distinct")
        object.__setattr__(self, "period", period)
        object.__setattr__(self, "complement", comp)


def granville_bound(a: IntSet) -> int:
    """lcm of all cyclotomic divisor indices of A(x); 1 when there are none."""
    return lcm_all(cyclotomic_divisors(a).indices)


def _complement_search(residues: Sequence[int], period: int) -> tuple[int, ...] | None:
    """Exact-cover backtracking for a complement B containing 0.

    ``residues`` are the distinct residues of the (normalized) set mod
    ``period``, sorted, with 0 present.  Each step covers the smallest
    uncovered residue r: the only usable shifts are b = r - a mod period
    for a in the set, and placing b either collides or covers #A fresh
    residues.  Seeding B with 0 loses no generality, because any tiling
    complement can be translated to contain 0.
    """
    size = len(residues)
    need = period // size
    covered = bytearray(period)
    for r in residues:
        covered[r] = 1
    chosen = [0]

    def extend() -> bool:
        if len(chosen) == need:
            return True
        r = covered.index(0)
        for a in residues:
            b = (r - a) % period
            shifted = [(x + b) % period for x in residues]
            if any(covered[s] for s in shifted):
                continue
            for s in shifted:
                covered[s] = 1
            chosen.append(b)
            if extend():
                return True
            chosen.pop()
            for s in shifted:
                covered[s] = 0
        return False

    if extend():
        return tuple(sorted(chosen))
    return None


def search_periods(a: IntSet, periods: Iterable[int]) -> TilingCertificate | None:
    """Try each candidate period in the given order; first certificate wins.

    Periods not divisible by #A, and periods where the set's residues
    collide, cannot carry a tiling and are skipped without search.
    """
    elems = a.normalized().elements
    size = len(elems)
    for period in periods:
        if period < size or period % size:
            continue
        residues = sorted({x % period for x in elems})
        if len(residues) != size:
            continue
        comp = _complement_search(residues, period)
        if comp is not None:
            return TilingCertificate(period, comp)
    return None


def find_tiling(a: IntSet, cap: int | None = None) -> TilingCertificate | None:
    """Search the divisors of the Granville bound L in increasing order.

    Returns the first certificate found, or None when no divisor of L
    works (which by Granville's bound means A does not tile at all).
    With ``cap`` set, raises PeriodCapExceeded instead of searching when
    L > cap.
    """
    bound = granville_bound(a)
    if cap is not None and bound > cap:
        raise PeriodCapExceeded(bound, cap)
    return search_periods(a, divisors(bound))


def brute_force_tiling(a: IntSet, max_period: int | None = None) -> TilingCertificate | None:
    """Independent oracle: try every period up to 2*max(A) + 2 (or the override)."""
    if max_period is None:
        max_period = 2 * a.elements[-1] + 2
    return search_periods(a, range(1, max_period + 1))


def verify_tiling(a: IntSet, cert: TilingCertificate) -> bool:
    """Check a certificate: right size, and every residue covered exactly once."""
    m = cert.period
    if a.size * len(cert.complement) != m:
        return False
    counts = bytearray(m)
    for x in a.elements:
        for b in cert.complement:
            r = (x + b) % m
            if counts[r]:
                return False
            counts[r] = 1
    return all(counts)


def tiles_z(a: IntSet, cap: int | None = None) -> bool:
    """True iff the set tiles the integers by translations."""
    return find_tiling(a, cap=cap) is not None
