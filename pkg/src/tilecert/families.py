"""Batch enumeration of desk-scale families and the invariant checks on them.

A family is an iterable of instances (sets or product specs); a check
maps one instance to either None (clean, or not applicable) or a
violation record.  Facts about an instance are computed once and every
check judges from the facts, so the command-line batch runner and the
verification suites share a single implementation of each property.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .arith import factorize
from .spectra import construct_spectrum, spectrum_search, verify_spectrum
from .tileset import IntSet, check_t1, check_t2
from .tiler import TilingCertificate, brute_force_tiling, find_tiling, verify_tiling
from .products import (
    ProductSpec,
    check_keller_violation,
    is_zero_one,
    keller_violation_witness,
    product_poly,
    product_set,
    tower_condition,
    two_factor_condition,
)

# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------


def subsets(max_elem: int, max_size: int) -> Iterator[IntSet]:
    """All subsets of {0, ..., max_elem} with between 2 and max_size elements."""
    for size in range(2, max_size + 1):
        for combo in itertools.combinations(range(max_elem + 1), size):
            yield IntSet(combo)


def two_factor_specs(max_m: int, max_n: int) -> Iterator[ProductSpec]:
    """All two-factor specs with steps up to max_m and lengths 2..max_n."""
    for m1, m2 in itertools.product(range(1, max_m + 1), repeat=2):
        for n1, n2 in itertools.product(range(2, max_n + 1), repeat=2):
            yield ProductSpec([(m1, n1), (m2, n2)])


def three_factor_specs(max_m: int, lengths: tuple[int, ...] = (2, 3)) -> Iterator[ProductSpec]:
    """All three-factor specs with steps up to max_m and lengths from the given pool."""
    for ms in itertools.product(range(1, max_m + 1), repeat=3):
        for ns in itertools.product(lengths, repeat=3):
            yield ProductSpec(zip(ms, ns))


# ---------------------------------------------------------------------------
# Facts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SubsetFacts:
    """One pass of the pipeline over a single set."""

    instance: IntSet
    t1: bool
    t2: bool
    tiling: TilingCertificate | None
    tiling_verified: bool
    brute: TilingCertificate | None
    brute_verified: bool
    spectrum_size: int | None
    spectrum_verified: bool


def subset_facts(a: IntSet) -> SubsetFacts:
    tiling = find_tiling(a)
    brute = brute_force_tiling(a)
    spectrum = construct_spectrum(a)
    return SubsetFacts(
        instance=a,
        t1=check_t1(a),
        t2=check_t2(a),
        tiling=tiling,
        tiling_verified=tiling is not None and verify_tiling(a, tiling),
        brute=brute,
        brute_verified=brute is not None and verify_tiling(a, brute),
        spectrum_size=None if spectrum is None else len(spectrum),
        spectrum_verified=spectrum is not None and verify_spectrum(a, spectrum),
    )


@dataclass(frozen=True)
class ProductFacts:
    """One pass of the pipeline over a single product spec."""

    instance: ProductSpec
    zero_one: bool
    tower: tuple[int, ...] | None
    two_factor: bool | None
    t1: bool | None
    t2: bool | None
    tiles: bool | None
    spectrum_ok: bool | None
    witness_ok: bool | None


def product_facts(spec: ProductSpec, with_spectrum: bool = False) -> ProductFacts:
    zero_one = is_zero_one(product_poly(spec))
    tower = tower_condition(spec)
    witness_ok = None
    if tower is None:
        witness = keller_violation_witness(spec)
        witness_ok = witness is not None and check_keller_violation(spec, witness.vector)
    t1 = t2 = tiles = spectrum_ok = None
    if zero_one:
        pset = product_set(spec)
        assert pset is not None
        t1 = check_t1(pset)
        t2 = check_t2(pset)
        tiles = find_tiling(pset) is not None
        if with_spectrum:
            target = 1
            for n in spec.lengths:
                target *= n
            found = spectrum_search(pset)
            spectrum_ok = (
                found is not None
                and len(found) == target - 1
                and verify_spectrum(pset, found)
            )
    return ProductFacts(
        instance=spec,
        zero_one=zero_one,
        tower=tower,
        two_factor=two_factor_condition(spec) if len(spec) == 2 else None,
        t1=t1,
        t2=t2,
        tiles=tiles,
        spectrum_ok=spectrum_ok,
        witness_ok=witness_ok,
    )


# ---------------------------------------------------------------------------
# Judgments: facts -> violation record or None
# ---------------------------------------------------------------------------


def distinct_prime_count(n: int) -> int:
    return len(factorize(n))


def judge_t1t2_implies_tiling(f: SubsetFacts) -> dict | None:
    if f.t1 and f.t2 and f.tiling is None:
        return {"set": list(f.instance.elements), "reason": "t1 and t2 hold but no tiling found"}
    return None


def judge_tiling_implies_t1(f: SubsetFacts) -> dict | None:
    if f.tiling is not None and not f.t1:
        return {"set": list(f.instance.elements), "reason": "tiles but t1 fails"}
    return None


def judge_tiling_implies_t2(f: SubsetFacts) -> dict | None:
    # Only claimed when #A has at most two distinct prime factors.
    if distinct_prime_count(f.instance.size) <= 2 and f.tiling is not None and not f.t2:
        return {"set": list(f.instance.elements), "reason": "tiles but t2 fails"}
    return None


def judge_granville_agreement(f: SubsetFacts) -> dict | None:
    restricted = f.tiling is not None
    unrestricted = f.brute is not None
    if restricted != unrestricted:
        return {
            "set": list(f.instance.elements),
            "reason": f"bound-restricted search found={restricted}, brute force found={unrestricted}",
        }
    if restricted and not (f.tiling_verified and f.brute_verified):
        return {"set": list(f.instance.elements), "reason": "certificate failed verification"}
    return None


def judge_spectrum_formula(f: SubsetFacts) -> dict | None:
    if not (f.t1 and f.t2):
        return None
    if f.spectrum_size != f.instance.size - 1 or not f.spectrum_verified:
        return {
            "set": list(f.instance.elements),
            "reason": f"constructed spectrum size={f.spectrum_size}, verified={f.spectrum_verified}",
        }
    return None


def judge_two_factor_equivalence(f: ProductFacts) -> dict | None:
    if not f.zero_one:
        return None
    outcomes = {
        "two_factor_condition": f.two_factor,
        "t1_and_t2": f.t1 and f.t2,
        "tiles": f.tiles,
        "spectrum": f.spectrum_ok,
    }
    if len(set(outcomes.values())) != 1:
        return {"spec": str(f.instance), **outcomes}
    return None


def judge_tower_equivalence(f: ProductFacts) -> dict | None:
    if not f.zero_one:
        return None
    outcomes = {
        "tower": f.tower is not None,
        "t1_and_t2": f.t1 and f.t2,
        "tiles": f.tiles,
    }
    if len(set(outcomes.values())) != 1:
        return {"spec": str(f.instance), **outcomes}
    return None


def judge_keller_witness(f: ProductFacts) -> dict | None:
    if not f.zero_one or f.tower is not None:
        return None
    if not f.witness_ok:
        return {"spec": str(f.instance), "reason": "no valid violation witness"}
    return None


# ---------------------------------------------------------------------------
# Batch runner
# ---------------------------------------------------------------------------

SUBSET_CHECKS = {
    "t1t2-implies-tiling": judge_t1t2_implies_tiling,
    "tiling-implies-t1": judge_tiling_implies_t1,
    "tiling-implies-t2": judge_tiling_implies_t2,
    "granville-period": judge_granville_agreement,
    "spectrum-formula": judge_spectrum_formula,
}

TWO_FACTOR_CHECKS = {
    "two-factor-equivalence": judge_two_factor_equivalence,
}

THREE_FACTOR_CHECKS = {
    "tower-equivalence": judge_tower_equivalence,
    "keller-witness": judge_keller_witness,
}


def _judge_subset(args: tuple[str, IntSet]) -> dict | None:
    name, a = args
    return SUBSET_CHECKS[name](subset_facts(a))


def _judge_product(args: tuple[str, ProductSpec]) -> dict | None:
    name, spec = args
    facts = product_facts(spec, with_spectrum=(name == "two-factor-equivalence"))
    checks = {**TWO_FACTOR_CHECKS, **THREE_FACTOR_CHECKS}
    return checks[name](facts)


def run_batch(
    family: str,
    instances: Iterable,
    check: str,
    workers: int = 1,
) -> dict:
    """Run one named check over a family; returns a deterministic summary dict."""
    if family == "subsets":
        if check not in SUBSET_CHECKS:
            raise ValueError(f"unknown check {check!r} for family {family!r}")
        worker = _judge_subset
    elif family == "two-factor":
        if check not in TWO_FACTOR_CHECKS:
            raise ValueError(f"unknown check {check!r} for family {family!r}")
        worker = _judge_product
    elif family == "three-factor":
        if check not in THREE_FACTOR_CHECKS:
            raise ValueError(f"unknown check {check!r} for family {family!r}")
        worker = _judge_product
    else:
        raise ValueError(f"unknown family {family!r}")
    jobs = [(check, inst) for inst in instances]
    if workers > 1:
        from multiprocessing import Pool

        with Pool(workers) as pool:
            results = pool.map(worker, jobs, chunksize=64)
    else:
        results = [worker(job) for job in jobs]
    violations = [r for r in results if r is not None]
    return {
        "family": family,
        "check": check,
        "instances": len(jobs),
        "violations": violations,
        "violation_count": len(violations),
    }
