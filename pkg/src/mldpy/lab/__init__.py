"""
Python package for the enumeration experiments. It contains the exhaustive enumeration of staircase ideals in bounded
boxes and the experiments built on it: the search of the bound l_e of the computing divisors, the finite value sets of
the minimal log discrepancy and the ascending chain probes.
"""

from .staircases import StaircaseEnumeration, enumerate_staircases, staircase_count
from .bounds import (
    Experiment, EllSearch, EllReport, ValueSetSurvey, ValueSetReport, AccProbe, AccReport, ell_search, closed_form_ell,
    closed_form_witness, value_set, acc_probe, sorted_values)
