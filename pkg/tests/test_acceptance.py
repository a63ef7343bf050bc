"""Acceptance suite: exhaustive desk-scale verification, one test per criterion.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the one-line
PASS/FAIL summary each criterion prints.  Every tolerance is pinned
here; the whole module finishes in a few minutes on commodity hardware.
"""

import itertools
import random
import time

import numpy as np
import pytest

from lattice import echelon, in_lattice
from tilecert.arith import divisors, euler_phi
from tilecert.analysis import classify_prime_power_cyclotomic, power_sums, ramanujan_sum
from tilecert.families import (
    product_facts,
    subset_facts,
    subsets,
    three_factor_specs,
    two_factor_specs,
)
from tilecert.intpoly import IntPoly, cyclotomic, cyclotomic_at_one, x_pow_minus_one
from tilecert.spectra import RationalSpectrum, verify_spectrum
from tilecert.tileset import IntSet
from tilecert.tiler import TilingCertificate, find_tiling, verify_tiling
from tilecert.products import w_basis

SUBSET_MAX_ELEM = 14
SUBSET_MAX_SIZE = 6
NUMERIC_TOLERANCE = 1e-6


def report(criterion: str, ok: bool, start: float, detail: str) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"{status} criterion {criterion}: {detail} [{time.perf_counter() - start:.1f}s]")


@pytest.fixture(scope="module")
def subset_family():
    return [subset_facts(a) for a in subsets(SUBSET_MAX_ELEM, SUBSET_MAX_SIZE)]


@pytest.fixture(scope="module")
def three_factor_family():
    return [product_facts(spec) for spec in three_factor_specs(6, (2, 3))]


def test_criterion_01_cyclotomic_identities():
    start = time.perf_counter()
    violations = []
    for n in range(1, 201):
        prod = IntPoly.one()
        for d in divisors(n):
            prod = prod * cyclotomic(d)
        if prod != x_pow_minus_one(n):
            violations.append(("product", n))
    for s in range(1, 201):
        if cyclotomic(s)(1) != cyclotomic_at_one(s):
            violations.append(("at_one", s))
    report("1", not violations, start,
           "cyclotomic product and value-at-1 identities, n,s <= 200")
    assert not violations, violations[:5]


def test_criterion_02_condition_implications(subset_family):
    start = time.perf_counter()
    bad_a = [f for f in subset_family if f.t1 and f.t2 and f.tiling is None]
    bad_b = [f for f in subset_family if f.tiling is not None and not f.t1]
    # every size 2..6 has at most two distinct prime factors, so (c)
    # applies to the whole family
    bad_c = [f for f in subset_family if f.tiling is not None and not f.t2]
    ok = not (bad_a or bad_b or bad_c)
    report("2", ok, start,
           f"(a) t1&t2=>tiles, (b) tiles=>t1, (c) tiles=>t2 over {len(subset_family)} sets")
    assert ok, (bad_a[:3], bad_b[:3], bad_c[:3])


def test_criterion_03_granville_bound_agreement(subset_family):
    start = time.perf_counter()
    bad = [
        f for f in subset_family
        if (f.tiling is None) != (f.brute is None)
        or (f.tiling is not None and not (f.tiling_verified and f.brute_verified))
    ]
    tilers = sum(1 for f in subset_family if f.tiling is not None)
    report("3", not bad, start,
           f"bound-restricted vs unrestricted period search agree ({tilers} tilers)")
    assert not bad, [f.instance.elements for f in bad[:5]]


def test_criterion_04_two_factor_equivalence():
    start = time.perf_counter()
    violations = []
    checked = 0
    for spec in two_factor_specs(8, 4):
        f = product_facts(spec, with_spectrum=True)
        if not f.zero_one:
            continue
        checked += 1
        outcomes = {f.two_factor, f.t1 and f.t2, f.tiles, f.spectrum_ok}
        if len(outcomes) != 1:
            violations.append((str(spec), f))
    report("4", not violations, start,
           f"condition<=>t1&t2<=>tiles<=>spectrum over {checked} two-factor specs")
    assert not violations, violations[:5]


def test_criterion_05_tower_equivalence(three_factor_family):
    start = time.perf_counter()
    violations = []
    checked = 0
    for f in three_factor_family:
        if not f.zero_one:
            continue
        checked += 1
        outcomes = {f.tower is not None, f.t1 and f.t2, f.tiles}
        if len(outcomes) != 1:
            violations.append(str(f.instance))
    report("5", not violations, start,
           f"tower<=>t1&t2<=>tiles over {checked} three-factor specs")
    assert not violations, violations[:5]


def test_criterion_06_spectrum_formula(subset_family):
    start = time.perf_counter()
    eligible = [f for f in subset_family if f.t1 and f.t2]
    bad = [
        f for f in eligible
        if f.spectrum_size != f.instance.size - 1 or not f.spectrum_verified
    ]
    report("6", not bad, start,
           f"constructed spectra have size #A-1 and verify on {len(eligible)} sets")
    assert not bad, [f.instance.elements for f in bad[:5]]


def test_criterion_07_keller_witnesses(three_factor_family):
    start = time.perf_counter()
    failures = [f for f in three_factor_family if f.zero_one and f.tower is None]
    bad = [f for f in failures if not f.witness_ok]
    report("7", not bad, start,
           f"valid violation witness for all {len(failures)} tower failures")
    assert not bad, [str(f.instance) for f in bad[:5]]


def _cyclotomic_product_multisets():
    for s in range(1, 81):
        if euler_phi(s) <= 60:
            yield (s,)
    for s in range(1, 25):
        for t in range(s, 25):
            if euler_phi(s) + euler_phi(t) <= 60:
                yield (s, t)
    for n in range(1, 61):
        yield tuple(divisors(n))
    rng = random.Random(20240917)
    made = 0
    while made < 200:
        k = rng.randint(2, 6)
        ms = tuple(sorted(rng.randint(1, 40) for _ in range(k)))
        if sum(euler_phi(s) for s in ms) <= 60:
            made += 1
            yield ms


def test_criterion_08_power_sum_oracles():
    start = time.perf_counter()
    violations = []

    # (a) Newton values equal Ramanujan totals on cyclotomic products
    products = 0
    for ms in _cyclotomic_product_multisets():
        prod = IntPoly.one()
        for s in ms:
            prod = prod * cyclotomic(s)
        series = power_sums(prod, 40)
        for j in range(1, 41):
            if series[j] != sum(ramanujan_sum(s, j) for s in ms):
                violations.append(("ramanujan", ms, j))
        products += 1

    # (b) gap identities on 1000 random 0/1 monic polynomials
    rng = random.Random(424242)
    for _ in range(1000):
        deg = rng.randint(2, 40)
        second = rng.randint(0, deg - 1)
        exponents = {deg, second} | set(rng.sample(range(second + 1), rng.randint(0, second)))
        coeffs = [0] * (deg + 1)
        for e in exponents:
            coeffs[e] = 1
        p = IntPoly(coeffs)
        gap = deg - second
        series = power_sums(p, gap)
        if any(series[j] != 0 for j in range(1, gap)) or series[gap] != -gap:
            violations.append(("gap", tuple(sorted(exponents))))

    # (c) numeric root summation to 1e-6 for degree <= 30
    rng = random.Random(3131)
    for _ in range(200):
        deg = rng.randint(2, 30)
        others = rng.sample(range(deg), rng.randint(1, deg))
        coeffs = [0] * (deg + 1)
        coeffs[deg] = 1
        for e in others:
            coeffs[e] = 1
        p = IntPoly(coeffs)
        roots = np.roots(list(reversed(p.coeffs)))
        series = power_sums(p, 12)
        for j in range(1, 13):
            if abs(sum(r**j for r in roots) - series[j]) > NUMERIC_TOLERANCE:
                violations.append(("numeric", tuple(p.coeffs), j))

    report("8", not violations, start,
           f"newton==ramanujan on {products} products; gap identities x1000; numeric to 1e-6")
    assert not violations, violations[:5]


def test_criterion_09_prime_power_family():
    from fractions import Fraction

    start = time.perf_counter()
    violations = []
    cases = {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1), 7: (7, 1),
             8: (2, 3), 9: (3, 2), 16: (2, 4), 25: (5, 2), 27: (3, 3)}
    for q, (p, alpha) in cases.items():
        step = p ** (alpha - 1)
        a = IntSet(range(0, p * step, step))
        if classify_prime_power_cyclotomic(a) != (p, alpha):
            violations.append((q, "classification"))
        cert = find_tiling(a)
        if cert != TilingCertificate(q, range(step)) or not verify_tiling(a, cert):
            violations.append((q, "certificate"))
        # the grid {j/q} restricted to j = 1..p-1: exactly the full-size
        # spectrum for this set (p elements, so p-1 values)
        spectrum = RationalSpectrum(Fraction(j, q) for j in range(1, p))
        if len(spectrum) != a.size - 1 or not verify_spectrum(a, spectrum):
            violations.append((q, "spectrum"))
    report("9", not violations, start,
           f"classified, tiled, spectrum-verified for {len(cases)} prime powers")
    assert not violations, violations


def test_criterion_10_lattice_span(three_factor_family):
    start = time.perf_counter()
    violations = []
    checked = 0
    for f in three_factor_family:
        if not f.zero_one:
            continue
        spec = f.instance
        basis = echelon(w_basis(spec))
        steps = spec.steps
        for w in itertools.product(range(-5, 6), repeat=3):
            if sum(a * b for a, b in zip(w, steps)) == 0:
                checked += 1
                if not in_lattice(basis, w):
                    violations.append((str(spec), w))
    report("10", not violations, start,
           f"{checked} orthogonal vectors (|w_i|<=5) all inside the basis span")
    assert not violations, violations[:5]
