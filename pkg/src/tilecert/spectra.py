"""Rational spectra of 0/1 (and general nonnegative) integer polynomials.

An N-spectrum for a polynomial A(x) is a set of N-1 distinct values
theta_1, ..., theta_{N-1} (theta_0 = 0 implicit) such that for every
pair j != k the number exp(2*pi*i*(theta_j - theta_k)) is a root of A.
This module works with rational theta only, where everything is exact:
exp(2*pi*i*p/q) in lowest terms is a primitive q-th root of unity, so it
is a root of A exactly when the q-th cyclotomic polynomial divides A.

Rational restriction is not a real loss at desk scale -- for the sizes
handled here a spectrum of full size is forced to be rational whenever
the polynomial's degree is small relative to N -- but a None from the
searcher is still reported as "no rational spectrum", never as a
refutation of spectrality in general.

Two producers exist: ``construct_spectrum`` applies the explicit formula
available under the Coven-Meyerowitz conditions, and ``spectrum_search``
runs a complete clique search over all candidate fractions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import prime_power
from .intpoly import IntPoly, divides_cyclotomic
from .tileset import IntSet, char_poly, cyclotomic_divisors, divisors_of_poly, check_t1, check_t2


@dataclass(init=False, frozen=True)
class RationalSpectrum:
    """Distinct reduced fractions in (0, 1); the implicit theta_0 = 0 is not stored."""

    thetas: tuple[Fraction, ...]

    def __init__(self, thetas: Iterable[Fraction]):
        ts = tuple(sorted(Fraction(t) for t in thetas))
        if any(not (0 < t < 1) for t in ts):
            raise ValueError("spectrum values must lie strictly inside (0, 1)")
        if any(a == b for a, b in zip(ts, ts[1:])):
            raise ValueError("spectrum values must be distinct")
        object.__setattr__(self, "thetas", ts)

    def __len__(self) -> int:
        return len(self.thetas)

    def __iter__(self):
        return iter(self.thetas)

    def __str__(self) -> str:
        return "{" + ",".join(str(t) for t in self.thetas) + "}"


def parse_thetas(text: str) -> list[Fraction]:
    """Parse a comma-separated fraction list such as "1/2,1/4,3/4"."""
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        try:
            out.append(Fraction(tok))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad fraction {tok!r}") from exc
    return out


def max_spectrum_size(p: IntPoly) -> int:
    """Upper bound on N for any N-spectrum: the number of nonzero coefficients.

    The exponential vectors attached to spectrum values are mutually
    orthogonal in a space whose dimension is the number of nonzero
    coefficients, so no larger spectrum can exist.
    """
    if any(c < 0 for c in p.coeffs):
        raise ValueError("polynomial must have nonnegative coefficients")
    return p.nonzero_terms()


def is_root_of(p: IntPoly, delta: Fraction) -> bool:
    """True iff exp(2*pi*i*delta) is a root of p, for delta in [0, 1)."""
    if not 0 <= delta < 1:
        raise ValueError("delta must lie in [0, 1)")
    if delta == 0:
        return p(1) == 0
    return divides_cyclotomic(p, delta.denominator)


def verify_spectrum_poly(p: IntPoly, thetas: Sequence[Fraction]) -> bool:
    """Check the root condition for every pair drawn from thetas plus 0.

    Values are taken mod 1 first; a repeated value (including a theta
    congruent to 0) violates distinctness and yields False.  Only the
    root conditions are checked here -- whether len(thetas) + 1 matches
    p evaluated at 1 is the caller's concern.
    """
    pts = [Fraction(0)] + [Fraction(t) % 1 for t in thetas]
    if len(set(pts)) != len(pts):
        return False
    for u, v in itertools.combinations(pts, 2):
        if not is_root_of(p, (u - v) % 1):
            return False
    return True


def verify_spectrum(a: IntSet, spectrum: RationalSpectrum) -> bool:
    """Check a spectrum against the set's characteristic polynomial."""
    return verify_spectrum_poly(char_poly(a), spectrum.thetas)


def construct_spectrum(a: IntSet) -> RationalSpectrum | None:
    """Explicit spectrum from the prime-power inventory, under (T1) and (T2).

    Returns None unless both conditions hold.  Otherwise builds all sums

        sum over inventory prime powers s = p**alpha of k_s / s,
        with 0 <= k_s < p,

    taken mod 1, drops 0, and returns the rest.  Under (T1) there are
    exactly #A such sums and they are pairwise distinct, so the result
    has #A - 1 values; it is verified before being returned and a
    failure there is an internal bug, not a caller error.
    """
    if not (check_t1(a) and check_t2(a)):
        return None
    powers = cyclotomic_divisors(a).prime_powers
    ranges = []
    for s in powers:
        pp = prime_power(s)
        assert pp is not None
        ranges.append([Fraction(k, s) for k in range(pp[0])])
    sums = {Fraction(0)}
    for combo in itertools.product(*ranges):
        sums.add(sum(combo, Fraction(0)) % 1)
    sums.discard(Fraction(0))
    spectrum = RationalSpectrum(sums)
    assert len(spectrum) == a.size - 1, "spectrum formula produced wrong count"
    assert verify_spectrum(a, spectrum), "spectrum formula failed verification"
    return spectrum


def _find_clique(adj: list[int], target: int) -> list[int] | None:
    """Find a clique of the given size in a graph stored as bitmask rows.

    Branch and bound: at each node the candidate with the fewest
    compatible partners is chosen (ties broken by index), and the search
    branches on including or excluding it, pruning when the current
    clique plus all remaining candidates cannot reach the target.
    """
    n = len(adj)

    def grow(members: list[int], allowed: int) -> list[int] | None:
        if len(members) == target:
            return members
        if len(members) + allowed.bit_count() < target:
            return None
        best = -1
        best_deg = n + 1
        mask = allowed
        while mask:
            v = (mask & -mask).bit_length() - 1
            deg = (adj[v] & allowed).bit_count()
            if deg < best_deg:
                best, best_deg = v, deg
            mask &= mask - 1
        taken = grow(members + [best], allowed & adj[best])
        if taken is not None:
            return taken
        return grow(members, allowed & ~(1 << best))

    return grow([], (1 << n) - 1)


def spectrum_search_poly(p: IntPoly, target: int | None = None) -> RationalSpectrum | None:
    """Complete search for a rational spectrum of a nonnegative polynomial.

    ``target`` is the number of theta values wanted; it defaults to
    p(1) - 1, the full-spectrum size.  Candidates are exactly the
    fractions in (0, 1) whose reduced denominator indexes a cyclotomic
    divisor of p (their difference with the implicit 0 must already be a
    root), and two candidates are compatible when their difference mod 1
    is a root; a spectrum is a clique of the target size.  None means no
    rational spectrum of that size exists.
    """
    n_value = p(1)
    if target is None:
        target = n_value - 1
    if target < 0:
        raise ValueError("target size must be nonnegative")
    if target == 0:
        return RationalSpectrum(())
    if target + 1 > max_spectrum_size(p):
        return None
    index_set = set(divisors_of_poly(p).indices)
    candidates = sorted(
        {Fraction(k, s) for s in index_set for k in range(1, s)
         if Fraction(k, s).denominator in index_set}
    )
    if len(candidates) < target:
        return None
    adj = [0] * len(candidates)
    for i, u in enumerate(candidates):
        for j in range(i + 1, len(candidates)):
            if ((u - candidates[j]) % 1).denominator in index_set:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    clique = _find_clique(adj, target)
    if clique is None:
        return None
    spectrum = RationalSpectrum(candidates[v] for v in clique)
    assert verify_spectrum_poly(p, spectrum.thetas)
    return spectrum


def spectrum_search(a: IntSet) -> RationalSpectrum | None:
    """Search for a full rational spectrum of the set (target size #A - 1)."""
    return spectrum_search_poly(char_poly(a.normalized()), a.size - 1)
