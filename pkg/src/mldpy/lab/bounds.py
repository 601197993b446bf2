"""
Experiments on the bound l_e of the coefficient k_E of a divisor that computes the minimal log discrepancy, on the
finiteness of the minimal log discrepancy values and on ascending chains of them. Every experiment enumerates the
tuples of staircase ideals in bounded boxes, so its results are restricted to those boxes.
"""

__author__ = "MldPy developers"
__copyright__ = "Copyright (c) 2021, MldPy developers"
__credits__ = ["MldPy developers"]
__license__ = "MIT"
__version__ = "v1.0.0-alpha"
__maintainer__ = "MldPy developers"

from ._helpers import PreconditionError, get_rng
from .staircases import StaircaseEnumeration
from mldpy.algebra.scalars import ExactScalar, Ordering, compare
from mldpy.invariants.multiideal import MultiIdeal, WeightVector, MINUS_INFINITY, value_to_dict
from mldpy.invariants.discrepancy import mld, min_k_of

from collections import Counter
from itertools import product
from joblib import Parallel, delayed

import numpy as np
import logging

logger = logging.getLogger(__name__)

ACC_CAVEAT = "empirical, desk-scale illustration, not a proof"
"""
The statement that accompanies every ascending chain probe.
"""


def _as_exponents(exponents):
    exponents = [ExactScalar.from_value(e) for e in exponents]
    if not exponents:
        raise PreconditionError("At least one exponent is needed.")
    for e in exponents:
        if compare(e, 0) != Ordering.GREATER:
            raise PreconditionError("Exponents must be positive, got %s." % e)
    return exponents


def _as_boxes(box_bound, nb_slots):
    if isinstance(box_bound, (int, np.integer)):
        return [int(box_bound)] * nb_slots
    boxes = [int(m) for m in box_bound]
    if len(boxes) != nb_slots:
        raise PreconditionError("Expected %d box sizes, got %d." % (nb_slots, len(boxes)))
    return boxes


def sorted_values(values, reverse=False):
    """
    Sorts minimal log discrepancy values with minus infinity first.

    Examples
    --------
    >>> sorted_values([ExactScalar(1), MINUS_INFINITY, ExactScalar(0)])
    [MinusInfinity, ExactScalar(a=0, b=0, c=0), ExactScalar(a=1, b=0, c=0)]

    Parameters
    ----------
    values: iterable
    reverse: bool, optional

    Returns
    -------
    list
    """
    return sorted(values, reverse=reverse)


class _Tally(object):
    """
    The associative summary of a batch of multiideals: the largest minimal k with its witnesses, the multiplicities of
    the values and the smallest box in which every value appears.
    """

    def __init__(self):
        self.count = 0
        self.max_min_k = None
        self.witnesses = []
        self.values = Counter()
        self.first_box = {}

    def add(self, multiideal, value, divisor):
        self.count += 1
        k = divisor.k
        if self.max_min_k is None or k > self.max_min_k:
            self.max_min_k, self.witnesses = k, []
        if k == self.max_min_k:
            self.witnesses.append((multiideal, divisor, value))
        self.values[value] += 1
        box = max(max(m) for ideal in multiideal.ideals for m in ideal.generators)
        if value not in self.first_box or box < self.first_box[value]:
            self.first_box[value] = box

    def merge(self, other):
        self.count += other.count
        if other.max_min_k is not None:
            if self.max_min_k is None or other.max_min_k > self.max_min_k:
                self.max_min_k, self.witnesses = other.max_min_k, list(other.witnesses)
            elif other.max_min_k == self.max_min_k:
                self.witnesses.extend(other.witnesses)
        self.values.update(other.values)
        for value, box in other.first_box.items():
            if value not in self.first_box or box < self.first_box[value]:
                self.first_box[value] = box
        return self


def _survey(exponents, heads, tails, include_trivial):
    tally = _Tally()
    for head in heads:
        for tail in product(*tails):
            ideals = (head,) + tail
            if not include_trivial and all(ideal.is_trivial for ideal in ideals):
                continue
            multiideal = MultiIdeal(list(zip(ideals, exponents)))
            result = mld(multiideal)
            tally.add(multiideal, result.value, min_k_of(multiideal, result))
    return tally


class Experiment(object):

    def __init__(self, n_jobs=1):
        """
        Abstract class of an experiment over enumerated multiideals. Calling the experiment runs it and returns its
        report; a callback, if given, receives the experiment itself after the run.

        Parameters
        ----------
        n_jobs: int, optional
            the number of parallel workers (joblib). Default is 1, i.e. sequential.
        """
        self._n_jobs = int(n_jobs)
        self._report = None

    def reset(self):
        """
        Forgets the last report.
        """
        self._report = None

    def _run(self, *args, **kwargs):
        """
        Runs the experiment.

        Returns
        -------
        the report of the experiment.
        """
        raise NotImplementedError()

    def __call__(self, *args, callback=None, **kwargs):
        """
        Runs the experiment, calls the callback (if provided) with the experiment itself and returns the report.

        Parameters
        ----------
        callback: callable, optional
            customised processing after the run. It gets as input the experiment itself.

        Returns
        -------
        the report of the experiment.
        """
        self._report = self._run(*args, **kwargs)

        if callback is not None:
            callback(self)

        return self._report

    @property
    def report(self):
        """
        The report of the last run, or None.
        """
        return self._report

    @property
    def n_jobs(self):
        return self._n_jobs

    def __repr__(self):
        return "%s(n_jobs=%d)" % (self.__class__.__name__, self._n_jobs)


class EllReport(object):

    def __init__(self, exponents, boxes, tally, include_trivial=False, truncated=False):
        """
        The summary of an exhaustive search of the bound l_e over bounded boxes.

        Parameters
        ----------
        exponents: list[ExactScalar]
            the exponent sequence e.
        boxes: list[int]
            the box size of every slot.
        tally: _Tally
            the aggregated results.
        include_trivial: bool, optional
            if True, the trivial multiideal was part of the search.
        truncated: bool, optional
            if True, a budget truncated the enumeration of some slot.
        """
        self._exponents = tuple(exponents)
        self._boxes = tuple(boxes)
        self._count = tally.count
        self._max_min_k = tally.max_min_k
        self._witnesses = sorted(tally.witnesses, key=lambda w: str(w[0]))
        self._multiplicities = dict(tally.values)
        self._first_box = dict(tally.first_box)
        self._include_trivial = bool(include_trivial)
        self._truncated = bool(truncated)

    @property
    def exponents(self):
        return self._exponents

    @property
    def box_bound(self):
        """
        The largest box size among the slots.

        Returns
        -------
        int
        """
        return max(self._boxes)

    @property
    def boxes(self):
        return self._boxes

    @property
    def count(self):
        """
        The number of multiideals that were evaluated.

        Returns
        -------
        int
        """
        return self._count

    @property
    def max_min_k(self):
        """
        The largest k of a minimal-k computing divisor, or None when nothing was enumerated.

        Returns
        -------
        int | None
        """
        return self._max_min_k

    @property
    def witnesses(self):
        """
        The multiideals that attain max_min_k with their minimal-k divisors, sorted by their text.

        Returns
        -------
        list[tuple[MultiIdeal, WeightVector]]
        """
        return [(m, d) for m, d, _ in self._witnesses]

    @property
    def witness_values(self):
        """
        The minimal log discrepancies of the witnesses.

        Returns
        -------
        list
        """
        return [v for _, _, v in self._witnesses]

    @property
    def value_set(self):
        """
        The minimal log discrepancy values, sorted with minus infinity first.

        Returns
        -------
        list
        """
        return sorted_values(self._multiplicities)

    @property
    def multiplicities(self):
        """
        How many multiideals attain every value.

        Returns
        -------
        dict
        """
        return dict(self._multiplicities)

    @property
    def first_box(self):
        """
        The smallest box size in which every value is attained.

        Returns
        -------
        dict
        """
        return dict(self._first_box)

    @property
    def include_trivial(self):
        return self._include_trivial

    @property
    def truncated(self):
        return self._truncated

    def to_dict(self):
        """
        The JSON form of the report.

        Returns
        -------
        dict
        """
        from mldpy.io.text import format_multiideal
        return {
            "exponents": [str(e) for e in self._exponents],
            "box_bound": self.box_bound,
            "boxes": list(self._boxes),
            "include_trivial": self._include_trivial,
            "truncated": self._truncated,
            "count": self._count,
            "max_min_k": self._max_min_k,
            "witnesses": [{"multiideal": format_multiideal(m), "value": value_to_dict(v), "divisor": d.to_dict()}
                          for m, d, v in self._witnesses],
            "value_set": [{"value": value_to_dict(v), "multiplicity": self._multiplicities[v],
                           "first_box": self._first_box[v]} for v in self.value_set]
        }

    def __repr__(self):
        return "EllReport(e=[%s], M=%d, max_min_k=%s, values=[%s])" % (
            ", ".join(str(e) for e in self._exponents), self.box_bound, self._max_min_k,
            ", ".join(str(v) for v in self.value_set))


class EllSearch(Experiment):

    def __init__(self, exponents, box_bound, per_ideal_budget=None, include_trivial=False, n_jobs=1):
        """
        The exhaustive search of l_e: the minimal log discrepancy and a minimal-k computing divisor of every tuple of
        staircase ideals, the i-th ideal with generators in the box [0..M_i]^2.

        Parameters
        ----------
        exponents: list[ExactScalar]
            the exponent sequence e.
        box_bound: int | list[int]
            the box size, shared by all the slots or one per slot.
        per_ideal_budget: int, optional
            the maximum number of staircases per slot. Default is no limit.
        include_trivial: bool, optional
            if True, the trivial multiideal (all the ideals are the whole ring) is included. Default is False.
        n_jobs: int, optional
            the number of parallel workers. Default is 1.
        """
        super(EllSearch, self).__init__(n_jobs=n_jobs)
        self._exponents = _as_exponents(exponents)
        self._boxes = _as_boxes(box_bound, len(self._exponents))
        self._budget = per_ideal_budget
        self._include_trivial = bool(include_trivial)

    def _run(self):
        # single slots may be the whole ring; only the all-trivial tuple is optional
        slots = [StaircaseEnumeration(m, include_trivial=(len(self._exponents) > 1 or self._include_trivial),
                                      budget=self._budget) for m in self._boxes]
        truncated = any(slot.is_truncated for slot in slots)
        heads, tails = list(slots[0]), [list(slot) for slot in slots[1:]]
        logger.info("l_e search for e = [%s]: %d x %s staircases", ", ".join(str(e) for e in self._exponents),
                    len(heads), " x ".join(str(len(t)) for t in tails) or "1")

        if self._n_jobs == 1 or len(heads) < 2:
            tally = _survey(self._exponents, heads, tails, self._include_trivial)
        else:
            nb_chunks = min(len(heads), 4 * max(self._n_jobs, 1))
            chunks = [list(c) for c in np.array_split(np.arange(len(heads)), nb_chunks)]
            tallies = Parallel(n_jobs=self._n_jobs)(
                delayed(_survey)(self._exponents, [heads[i] for i in c], tails, self._include_trivial)
                for c in chunks)
            tally = _Tally()
            for t in tallies:
                tally.merge(t)
        return EllReport(self._exponents, self._boxes, tally, self._include_trivial, truncated)

    @property
    def exponents(self):
        return tuple(self._exponents)

    @property
    def boxes(self):
        return tuple(self._boxes)


def ell_search(exponents, box_bound, per_ideal_budget=None, include_trivial=False, n_jobs=1, callback=None):
    """
    Searches the bound l_e over the staircase tuples of bounded boxes.

    Examples
    --------
    >>> report = ell_search([1], 3)
    >>> report.max_min_k
    4
    >>> 'y^3, x^2 @ 1' in [str(m) for m, _ in report.witnesses]
    True
    >>> [str(v) for v in report.value_set]
    ['-inf', '0', '1']

    Parameters
    ----------
    exponents: list[ExactScalar]
    box_bound: int | list[int]
    per_ideal_budget: int, optional
    include_trivial: bool, optional
    n_jobs: int, optional
    callback: callable, optional
        called with the experiment after the run.

    Returns
    -------
    EllReport
    """
    return EllSearch(exponents, box_bound, per_ideal_budget, include_trivial, n_jobs)(callback=callback)


def _ceil_inverse(x):
    """
    The smallest integer n with n * x >= 1, for a positive scalar x.
    """
    n = 1
    while compare(x.scale(n), 1) == Ordering.LESS:
        n += 1
    return n


def _floor_inverse(x):
    """
    The largest integer n with n * x <= 1, for a positive scalar x.
    """
    n = 0
    while compare(x.scale(n + 1), 1) != Ordering.GREATER:
        n += 1
    return n


def closed_form_ell(e1):
    """
    The stated values of l_e for one exponent e1 >= 1: 1 for e1 > 2, ceil(1 / (e1 - 1)) + 1 for 1 < e1 <= 2 and 4 for
    e1 = 1. They bound the minimal k found by the search from above.

    Examples
    --------
    >>> closed_form_ell(3), closed_form_ell(ExactScalar("3/2")), closed_form_ell(1)
    (1, 3, 4)
    >>> closed_form_ell(ExactScalar("1/2"))
    Traceback (most recent call last):
        ...
    mldpy.__helpers.PreconditionError: No closed form of l_e is known for e1 = 1/2 < 1.

    Parameters
    ----------
    e1: ExactScalar
        a positive exponent.

    Returns
    -------
    int
    """
    e1 = ExactScalar.from_value(e1)
    if compare(e1, 0) != Ordering.GREATER:
        raise PreconditionError("Exponents must be positive, got %s." % e1)
    if compare(e1, 1) == Ordering.LESS:
        raise PreconditionError("No closed form of l_e is known for e1 = %s < 1." % e1)
    if compare(e1, 2) == Ordering.GREATER:
        return 1
    if compare(e1, 1) == Ordering.EQUAL:
        return 4
    return _ceil_inverse(e1 - 1) + 1


def closed_form_witness(e1):
    """
    The minimal-k divisor of the ideal (x) with exponent 1 < e1 <= 2, where a(p) = p2 - (e1 - 1) p1: the first
    negative weight is (floor(1 / (e1 - 1)) + 1, 1).

    Examples
    --------
    >>> closed_form_witness(ExactScalar("3/2"))
    WeightVector(p1=3, p2=1)
    >>> closed_form_witness(ExactScalar("7/4"))
    WeightVector(p1=2, p2=1)

    Parameters
    ----------
    e1: ExactScalar

    Returns
    -------
    WeightVector
    """
    e1 = ExactScalar.from_value(e1)
    if compare(e1, 1) != Ordering.GREATER or compare(e1, 2) == Ordering.GREATER:
        raise PreconditionError("The witness of (x) is tabulated for 1 < e1 <= 2, got %s." % e1)
    return WeightVector(_floor_inverse(e1 - 1) + 1, 1)


class ValueSetReport(object):

    def __init__(self, exponents, box_bound, values, first_box, multiplicities):
        """
        The minimal log discrepancy values of the staircase tuples in a box, with the smallest box M* in which the set
        stopped growing.

        Parameters
        ----------
        exponents: list[ExactScalar]
        box_bound: int
        values: list
            sorted with minus infinity first.
        first_box: dict
            the smallest box size that attains every value.
        multiplicities: dict
        """
        self._exponents = tuple(exponents)
        self._box_bound = int(box_bound)
        self._values = list(values)
        self._first_box = dict(first_box)
        self._multiplicities = dict(multiplicities)

    def at(self, box_bound):
        """
        The value set of a smaller box.

        Parameters
        ----------
        box_bound: int

        Returns
        -------
        list
        """
        return [v for v in self._values if self._first_box[v] <= box_bound]

    @property
    def values(self):
        return list(self._values)

    @property
    def stabilized_at(self):
        """
        The smallest box size M* <= M whose value set equals the one of M.

        Returns
        -------
        int
        """
        return max(self._first_box.values()) if self._first_box else 0

    @property
    def exponents(self):
        return self._exponents

    @property
    def box_bound(self):
        return self._box_bound

    @property
    def multiplicities(self):
        return dict(self._multiplicities)

    def to_dict(self):
        return {
            "exponents": [str(e) for e in self._exponents],
            "box_bound": self._box_bound,
            "stabilized_at": self.stabilized_at,
            "values": [{"value": value_to_dict(v), "multiplicity": self._multiplicities[v],
                        "first_box": self._first_box[v]} for v in self._values]
        }

    def __repr__(self):
        return "ValueSetReport(e=[%s], M=%d, M*=%d, values=[%s])" % (
            ", ".join(str(e) for e in self._exponents), self._box_bound, self.stabilized_at,
            ", ".join(str(v) for v in self._values))


class ValueSetSurvey(Experiment):

    def __init__(self, exponents, box_bound, include_trivial=True, per_ideal_budget=None, n_jobs=1):
        """
        The set of minimal log discrepancy values over the staircase tuples of a box. The trivial multiideal is part of
        the survey by default.

        Parameters
        ----------
        exponents: list[ExactScalar]
        box_bound: int | list[int]
        include_trivial: bool, optional
            Default is True.
        per_ideal_budget: int, optional
        n_jobs: int, optional
        """
        super(ValueSetSurvey, self).__init__(n_jobs=n_jobs)
        self._search = EllSearch(exponents, box_bound, per_ideal_budget, include_trivial, n_jobs)

    def _run(self):
        report = self._search()
        return ValueSetReport(report.exponents, report.box_bound, report.value_set, report.first_box,
                              report.multiplicities)


def value_set(exponents, box_bound, include_trivial=True, per_ideal_budget=None, n_jobs=1, callback=None):
    """
    The finite set of minimal log discrepancy values over the staircase tuples of a box.

    Examples
    --------
    >>> report = value_set([1], 3)
    >>> [str(v) for v in report.values], report.stabilized_at
    (['-inf', '0', '1', '2'], 2)
    >>> [str(v) for v in value_set([3], 2).values]
    ['-inf', '2']

    Parameters
    ----------
    exponents: list[ExactScalar]
    box_bound: int | list[int]
    include_trivial: bool, optional
    per_ideal_budget: int, optional
    n_jobs: int, optional
    callback: callable, optional

    Returns
    -------
    ValueSetReport
    """
    return ValueSetSurvey(exponents, box_bound, include_trivial, per_ideal_budget, n_jobs)(callback=callback)


class AccReport(object):

    def __init__(self, dcc_set, box_bound, samples, exponent_tuples, values):
        """
        The result of an ascending chain probe: the sampled exponent tuples, their value set in descending order and
        the longest strictly ascending chain of the values.

        Parameters
        ----------
        dcc_set: list[ExactScalar]
        box_bound: int
        samples: int
        exponent_tuples: list[tuple[ExactScalar]]
        values: list
        """
        self._dcc_set = tuple(dcc_set)
        self._box_bound = int(box_bound)
        self._samples = int(samples)
        self._tuples = [tuple(t) for t in exponent_tuples]
        self._values = sorted_values(values, reverse=True)

    @property
    def values(self):
        """
        The values in descending order.

        Returns
        -------
        list
        """
        return list(self._values)

    @property
    def chain(self):
        """
        The longest strictly ascending chain of attained values; in a finite set it holds all of them.

        Returns
        -------
        list
        """
        return list(reversed(self._values))

    @property
    def exponent_tuples(self):
        return list(self._tuples)

    @property
    def caveat(self):
        return ACC_CAVEAT

    def to_dict(self):
        return {
            "dcc_set": [str(e) for e in self._dcc_set],
            "box_bound": self._box_bound,
            "samples": self._samples,
            "exponent_tuples": [[str(e) for e in t] for t in self._tuples],
            "values": [value_to_dict(v) for v in self._values],
            "chain_length": len(self._values),
            "chain": [value_to_dict(v) for v in self.chain],
            "caveat": ACC_CAVEAT
        }

    def __repr__(self):
        return "AccReport(samples=%d, values=[%s], chain_length=%d; %s)" % (
            self._samples, ", ".join(str(v) for v in self._values), len(self._values), ACC_CAVEAT)


class AccProbe(Experiment):

    def __init__(self, dcc_set, box_bound, samples, slots=1, limit_points=(), rng=None, n_jobs=1):
        """
        Probes the ascending chain condition of the minimal log discrepancies with exponents in a finite description of
        a DCC set: exponent tuples are drawn from the set (limit points included) with a seeded random state and the
        values of their staircase tuples are collected.

        Parameters
        ----------
        dcc_set: list[ExactScalar]
            the members of the set.
        box_bound: int
            the box size of the staircases.
        samples: int
            the number of exponent tuples to draw.
        slots: int, optional
            the length of the exponent tuples. Default is 1.
        limit_points: list[ExactScalar], optional
            the limit points of the set, drawn like its members.
        rng: np.random.RandomState | int, optional
            the random state; an integer seeds a new one. Default is the package random state.
        n_jobs: int, optional
        """
        super(AccProbe, self).__init__(n_jobs=n_jobs)
        self._pool = _as_exponents(list(dcc_set) + list(limit_points))
        self._dcc_set = self._pool[:len(dcc_set)]
        self._box_bound = int(box_bound)
        self._samples = int(samples)
        self._slots = int(slots)
        self.rng = get_rng(rng)

    def _run(self):
        tuples = []
        for _ in range(self._samples):
            idx = self.rng.randint(len(self._pool), size=self._slots)
            e = tuple(sorted((self._pool[i] for i in idx), key=lambda s: s.components))
            if e not in tuples:
                tuples.append(e)
        values = set()
        for e in tuples:
            values |= set(EllSearch(e, self._box_bound, include_trivial=True, n_jobs=self._n_jobs)().value_set)
        return AccReport(self._dcc_set, self._box_bound, self._samples, tuples, values)


def acc_probe(dcc_set, box_bound, samples, slots=1, limit_points=(), rng=None, n_jobs=1, callback=None):
    """
    An empirical, desk-scale probe of the ascending chain condition.

    Examples
    --------
    >>> report = acc_probe([1], 3, samples=2, rng=2021)
    >>> [str(v) for v in report.chain], report.caveat
    (['-inf', '0', '1', '2'], 'empirical, desk-scale illustration, not a proof')
    >>> acc_probe([1], 3, samples=0).values
    []

    Parameters
    ----------
    dcc_set: list[ExactScalar]
    box_bound: int
    samples: int
    slots: int, optional
    limit_points: list[ExactScalar], optional
    rng: np.random.RandomState | int, optional
    n_jobs: int, optional
    callback: callable, optional

    Returns
    -------
    AccReport
    """
    return AccProbe(dcc_set, box_bound, samples, slots, limit_points, rng, n_jobs)(callback=callback)
