"""
Python package for the singularity invariants of multiideals at the origin of the plane. It contains the log
discrepancies of the toric divisors, the minimal log discrepancy with its computing divisors, the log canonical
threshold, the upper bounds of polynomial multiideals through monomialization and coordinate search, and brute force
oracles that cross-check them.
"""

from .multiideal import (
    MultiIdeal, PolyMultiIdeal, WeightVector, MldResult, LctResult, MINUS_INFINITY, UNBOUNDED, is_finite,
    compare_values, pad_multiideal)
from .discrepancy import log_discrepancy, valuation, mld, minus_infinity_witness, min_k_computing_divisor
from .threshold import lct, lct_mld_consistency
from .coordinates import monomialized_upper_bound, coordinate_search
from .oracle import brute_force_mld, brute_force_lct
