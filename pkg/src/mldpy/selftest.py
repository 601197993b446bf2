"""
The pinned regression table: known minimal log discrepancies, computing divisors, thresholds, bounds of the computing
divisors and value sets, recomputed and compared with their expected text forms.
"""

__author__ = "MldPy developers"
__copyright__ = "Copyright (c) 2021, MldPy developers"
__credits__ = ["MldPy developers"]
__license__ = "MIT"
__version__ = "v1.0.0-alpha"
__maintainer__ = "MldPy developers"

from mldpy.algebra.scalars import ExactScalar, Ordering, compare
from mldpy.algebra.polynomials import monomialize
from mldpy.invariants.multiideal import MultiIdeal, pad_multiideal
from mldpy.invariants.discrepancy import mld, min_k_of, log_discrepancy
from mldpy.invariants.threshold import lct
from mldpy.lab.bounds import ell_search, value_set, closed_form_ell
from mldpy.io.text import parse_ideal

from collections import namedtuple

import logging

logger = logging.getLogger(__name__)


PinnedCase = namedtuple('PinnedCase', ['name', 'expected', 'compute', 'slow'], defaults=[False])
"""
A regression case: its name, the expected text, the function that computes the actual text and whether it enumerates
large boxes.
"""


def _mld_text(generators, exponent):
    result = mld(MultiIdeal.single(generators, exponent))
    return "%s at (%d, %d), k=%d" % (result.value, result.computing_divisor.p1, result.computing_divisor.p2, result.k)


def _lct_text(generators, exponent=1):
    result = lct(MultiIdeal.single(generators, exponent))
    return "%s at (%d, %d), exceptional=%s" % (result.value, result.computing_ray[0], result.computing_ray[1],
                                               result.exceptional)


def _non_exceptional_witness():
    # (4, 3) is negative for (x^3, y^4)^(2/pi), though (3, 2) comes first
    a = log_discrepancy((4, 3), MultiIdeal.single([(3, 0), (0, 4)], ExactScalar(0, 0, 2)))
    return "%s %s" % (a, "< 0" if compare(a, 0) == Ordering.LESS else ">= 0")


def _frobenius(p):
    ideal = parse_ideal("(x + y)^%d" % p, p)
    return "%s" % monomialize(ideal)


def _ell_below_closed_form(e1, box_bound, allowed):
    report = ell_search([e1], box_bound, include_trivial=True)
    bound = closed_form_ell(e1)
    values = [str(v) for v in report.value_set]
    return "%s" % (report.max_min_k <= bound and set(values) <= allowed)


def _ell_text(exponents, box_bound, witness=None):
    report = ell_search(exponents, box_bound)
    text = "%s in [%s]" % (report.max_min_k, ", ".join(str(v) for v in report.value_set))
    if witness is not None:
        generators, divisor = witness
        multiideal = MultiIdeal.single(generators, exponents[0])
        found = any(m == multiideal and tuple(d) == divisor for m, d in report.witnesses)
        text += ", witness %s at %s: %s" % (multiideal, divisor, found)
    return text


def _closed_forms(exponents):
    return ", ".join(str(closed_form_ell(ExactScalar(e))) for e in exponents)


def _padded_text(generators, exponents):
    # the first ideal is the whole ring
    multiideal = pad_multiideal(MultiIdeal.single(generators, exponents[-1]), exponents)
    result = mld(multiideal)
    divisor = min_k_of(multiideal, result)
    return "%s at (%d, %d), k=%d" % (result.value, divisor.p1, divisor.p2, divisor.k)


def _mixed_value_set(exponents, boxes):
    report = ell_search(exponents, boxes)
    return "[%s], l <= 9: %s" % (", ".join(str(v) for v in report.value_set), report.max_min_k <= 9)


def _value_set(box_bound):
    report = value_set([1], box_bound)
    return "[%s] from M=%d" % (", ".join(str(v) for v in report.values), report.stabilized_at)


PINNED_CASES = [
    PinnedCase("mld of (x^2, y^3)", "-inf at (3, 2), k=4", lambda: _mld_text([(2, 0), (0, 3)], 1)),
    PinnedCase("mld of (x^3, y^7)^(1/2)", "-inf at (7, 3), k=9", lambda: _mld_text([(3, 0), (0, 7)], "1/2")),
    PinnedCase("mld of (x^3, y^4)^(2/pi)", "-inf at (3, 2), k=4",
               lambda: _mld_text([(3, 0), (0, 4)], ExactScalar(0, 0, 2))),
    PinnedCase("log discrepancy of E(4, 3) on (x^3, y^4)^(2/pi)", "7 - 24/pi < 0", _non_exceptional_witness),
    PinnedCase("mld of (x)^3", "-inf at (1, 1), k=1", lambda: _mld_text([(1, 0)], 3)),
    PinnedCase("mld of (x, y)^3", "-inf at (1, 1), k=1", lambda: _mld_text([(1, 0), (0, 1)], 3)),
    PinnedCase("mld of (x)^(3/2)", "-inf at (3, 1), k=3", lambda: _mld_text([(1, 0)], "3/2")),
    PinnedCase("mld of (x)^(7/4)", "-inf at (2, 1), k=2", lambda: _mld_text([(1, 0)], "7/4")),
    PinnedCase("mld of (x, y^2)^(3/2) at its threshold", "0 at (2, 1), k=2",
               lambda: _mld_text([(1, 0), (0, 2)], "3/2")),
    PinnedCase("mld of the trivial multiideal", "2 at (1, 1), k=1", lambda: _mld_text([(0, 0)], 1)),
    PinnedCase("lct of (x)", "1 at (1, 0), exceptional=False", lambda: _lct_text([(1, 0)])),
    PinnedCase("lct of (x^2, y^3)", "5/6 at (3, 2), exceptional=True", lambda: _lct_text([(2, 0), (0, 3)])),
    PinnedCase("monomialization of (x + y)^2 in characteristic 2", "y^2, x^2", lambda: _frobenius(2)),
    PinnedCase("monomialization of (x + y)^3 in characteristic 3", "y^3, x^3", lambda: _frobenius(3)),
    PinnedCase("monomialization of (x + y)^5 in characteristic 5", "y^5, x^5", lambda: _frobenius(5)),
    PinnedCase("l_e for e = 1 in the box 3", "4", lambda: "%s" % ell_search([1], 3).max_min_k),
    PinnedCase("l_e for e = 3/2 in the box 4", "True",
               lambda: _ell_below_closed_form(ExactScalar("3/2"), 4, {"2", "1/2", "0", "-inf"})),
    PinnedCase("l_e for e = 7/4 in the box 4", "True",
               lambda: _ell_below_closed_form(ExactScalar("7/4"), 4, {"2", "1/4", "-inf"})),
    PinnedCase("l_e for e = 2 in the box 4", "True",
               lambda: _ell_below_closed_form(ExactScalar(2), 4, {"2", "0", "-inf"})),
    PinnedCase("values for e = 1 in the box 3", "[-inf, 0, 1, 2] from M=2", lambda: _value_set(3)),
    PinnedCase("closed forms of l_e for e = 1, 5/4, 3/2, 7/4, 2, 3", "4, 5, 3, 3, 2, 1",
               lambda: _closed_forms(["1", "5/4", "3/2", "7/4", "2", "3"])),
    PinnedCase("l_e for e = 3 in the box 4", "1 in [-inf]", lambda: _ell_text([ExactScalar(3)], 4)),
    PinnedCase("mld of (1)^1 (x^3, y^7)^(1/2)", "-inf at (7, 3), k=9",
               lambda: _padded_text([(3, 0), (0, 7)], [ExactScalar(1), ExactScalar("1/2")])),
    PinnedCase("l_e for e = 1/2 in the box 7", "9 in [-inf, 0, 1/2, 1, 3/2], witness y^7, x^3 @ 1/2 at (7, 3): True",
               lambda: _ell_text([ExactScalar("1/2")], 7, ([(3, 0), (0, 7)], (7, 3))), True),
    PinnedCase("l_e for e = 2/pi in the box 6", "4 in [-inf, 2 - 6/pi, 4 - 12/pi, 3 - 8/pi, 2 - 4/pi, 2 - 2/pi]",
               lambda: _ell_text([ExactScalar(0, 0, 2)], 6), True),
    PinnedCase("values for e = (1, 1/2) in the boxes (3, 4)", "[-inf, 0, 1/2, 1, 3/2], l <= 9: True",
               lambda: _mixed_value_set([ExactScalar(1), ExactScalar("1/2")], [3, 4]), True)
]
"""
The regression table.
"""


def run_selftest(cases=None, include_slow=True):
    """
    Recomputes every pinned case.

    Examples
    --------
    >>> report = run_selftest(PINNED_CASES[:2])
    >>> report["passed"], report["failed"]
    (2, [])

    Parameters
    ----------
    cases: list[PinnedCase], optional
        the cases to run. Default is the whole table.
    include_slow: bool, optional
        if False, the cases that enumerate large boxes are skipped. Default is True.

    Returns
    -------
    dict
        the number of passed cases, the names of the failed ones and the outcome of every case.
    """
    if cases is None:
        cases = PINNED_CASES
    if not include_slow:
        cases = [case for case in cases if not case.slow]
    outcomes, failed = [], []
    for case in cases:
        try:
            actual = case.compute()
        except Exception as e:
            actual = "%s: %s" % (type(e).__name__, e)
        passed = actual == case.expected
        if not passed:
            failed.append(case.name)
            logger.warning("selftest case '%s' failed: expected %s, got %s", case.name, case.expected, actual)
        outcomes.append({"name": case.name, "expected": case.expected, "actual": actual, "passed": passed})
    return {"passed": len(outcomes) - len(failed), "failed": failed, "cases": outcomes}
