"""tilecert: certifying toolkit for integer tilings by translation.

Decides, with explicit certificates, whether a finite set of nonnegative
integers tiles the integers by translations, whether it satisfies the
Coven-Meyerowitz conditions (T1)/(T2), and whether its characteristic
polynomial admits a full rational spectrum; also handles products of
arithmetic-progression polynomials via the tower condition and Keller
violation witnesses.
"""

from .intpoly import (
    IntPoly,
    cyclotomic,
    cyclotomic_at_one,
    divides_cyclotomic,
    x_pow_minus_one,
)
from .tileset import (
    CycloDivisors,
    IntSet,
    char_poly,
    check_t1,
    check_t2,
    cyclotomic_divisors,
    divisors_of_poly,
)
from .tiler import (
    PeriodCapExceeded,
    TilingCertificate,
    brute_force_tiling,
    find_tiling,
    granville_bound,
    search_periods,
    tiles_z,
    verify_tiling,
)
from .spectra import (
    RationalSpectrum,
    construct_spectrum,
    is_root_of,
    max_spectrum_size,
    spectrum_search,
    spectrum_search_poly,
    verify_spectrum,
    verify_spectrum_poly,
)
from .products import (
    KellerWitness,
    ProductSpec,
    check_keller_violation,
    factor_poly,
    is_zero_one,
    keller_violation_witness,
    normalize_gcd,
    product_poly,
    product_set,
    tower_condition,
    two_factor_condition,
    w_basis,
)
from .analysis import (
    PowerSumSeries,
    classify_prime_power_cyclotomic,
    power_sums,
    ramanujan_sum,
)
from .report import AnalysisReport, analyze_set, product_report, tiling_report

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "CycloDivisors",
    "IntPoly",
    "IntSet",
    "KellerWitness",
    "PeriodCapExceeded",
    "PowerSumSeries",
    "ProductSpec",
    "RationalSpectrum",
    "TilingCertificate",
    "analyze_set",
    "brute_force_tiling",
    "char_poly",
    "check_keller_violation",
    "check_t1",
    "check_t2",
    "classify_prime_power_cyclotomic",
    "construct_spectrum",
    "cyclotomic",
    "cyclotomic_at_one",
    "cyclotomic_divisors",
    "divides_cyclotomic",
    "divisors_of_poly",
    "factor_poly",
    "find_tiling",
    "granville_bound",
    "is_root_of",
    "is_zero_one",
    "keller_violation_witness",
    "max_spectrum_size",
    "normalize_gcd",
    "power_sums",
    "product_poly",
    "product_report",
    "product_set",
    "ramanujan_sum",
    "search_periods",
    "spectrum_search",
    "spectrum_search_poly",
    "tiles_z",
    "tiling_report",
    "tower_condition",
    "two_factor_condition",
    "verify_spectrum",
    "verify_spectrum_poly",
    "verify_tiling",
    "w_basis",
    "x_pow_minus_one",
]
