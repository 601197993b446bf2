import doctest
import warnings
import mldpy.lab.bounds as bo

from mldpy.algebra.scalars import ExactScalar
from mldpy.invariants.multiideal import MultiIdeal, MINUS_INFINITY, pad_multiideal
from mldpy.invariants.discrepancy import mld, min_k_of
from mldpy.lab._helpers import PreconditionError

import pytest


def _texts(values):
    return [str(v) for v in values]


def test_doctests():
    failures, _ = doctest.testmod(bo)
    assert failures == 0


def test_exponent_one_needs_four():
    report = bo.ell_search([1], 3)
    assert report.max_min_k == 4
    assert report.count == 68
    for m, d in report.witnesses:
        assert d.k == 4
        assert min_k_of(m, mld(m)) == d
    assert report.first_box[MINUS_INFINITY] == 2


@pytest.mark.parametrize("e1, extra", [("5/4", {"1/2", "1/4"}), ("3/2", set()), ("7/4", set()), ("2", set())])
def test_exponents_up_to_two_stay_below_the_closed_form(e1, extra):
    e1 = ExactScalar(e1)
    report = bo.ell_search([e1], 4, include_trivial=True)
    assert report.max_min_k <= bo.closed_form_ell(e1)
    witness = bo.closed_form_witness(e1)
    x = MultiIdeal.single([(1, 0)], e1)
    assert min_k_of(x, mld(x)) == witness
    values = _texts(report.value_set)
    assert values[0] == "-inf" and values[-1] == "2"
    assert set(values) <= {"-inf", "0", "2", str(2 - e1)} | extra


def test_exponents_above_two_need_one():
    report = bo.ell_search([ExactScalar("5/2")], 3)
    assert report.max_min_k == 1
    assert _texts(report.value_set) == ["-inf"]
    assert bo.closed_form_ell(3) == 1


def test_closed_form_needs_exponents_from_one():
    with pytest.raises(PreconditionError):
        bo.closed_form_ell(ExactScalar("1/2"))
    with pytest.raises(PreconditionError):
        bo.closed_form_ell(0)
    with pytest.raises(PreconditionError):
        bo.closed_form_witness(1)


def test_value_sets_grow_with_the_box():
    report = bo.value_set([1], 3)
    assert _texts(report.values) == ["-inf", "0", "1", "2"]
    for m in range(report.box_bound):
        assert set(report.at(m)) <= set(report.at(m + 1))
    assert report.at(report.stabilized_at) == report.values
    assert _texts(report.at(0)) == ["2"]
    assert sum(report.multiplicities.values()) == 69


def test_value_set_without_the_trivial_multiideal():
    assert _texts(bo.value_set([1], 3, include_trivial=False).values) == ["-inf", "0", "1"]


def test_two_slots_contain_the_padded_single_slot():
    half = ExactScalar("1/2")
    single = bo.value_set([half], 2)
    double = bo.value_set([1, half], 2)
    assert set(single.values) <= set(double.values)
    M = MultiIdeal.single([(1, 0), (0, 2)], half)
    assert mld(pad_multiideal(M, [1, half])).value == mld(M).value


def test_budget_is_reported():
    with warnings.catch_warnings(record=True):
        warnings.simplefilter("always")
        report = bo.ell_search([1], 3, per_ideal_budget=5)
    assert report.truncated
    assert report.count == 5
    assert report.to_dict()["truncated"] is True


def test_parallel_search_agrees():
    sequential = bo.ell_search([1, ExactScalar("1/2")], 2)
    parallel = bo.ell_search([1, ExactScalar("1/2")], 2, n_jobs=2)
    assert sequential.max_min_k == parallel.max_min_k
    assert sequential.multiplicities == parallel.multiplicities
    assert sequential.first_box == parallel.first_box
    assert [str(m) for m, _ in sequential.witnesses] == [str(m) for m, _ in parallel.witnesses]


def test_callback_sees_the_experiment():
    seen = []
    report = bo.ell_search([2], 2, callback=lambda experiment: seen.append(experiment.report))
    assert seen == [report]


def test_acc_probe_is_seeded():
    dcc = [ExactScalar(1), ExactScalar("1/2"), ExactScalar("1/3")]
    a = bo.acc_probe(dcc, 2, samples=4, slots=2, limit_points=[ExactScalar(0, 0, 1)], rng=7)
    b = bo.acc_probe(dcc, 2, samples=4, slots=2, limit_points=[ExactScalar(0, 0, 1)], rng=7)
    assert a.to_dict() == b.to_dict()
    chain = a.chain
    assert all(x < y for x, y in zip(chain[:-1], chain[1:]))
    assert a.to_dict()["chain_length"] == len(chain)
    assert all(len(t) == 2 for t in a.exponent_tuples)


@pytest.mark.slow
def test_half_exponent_needs_nine():
    half = ExactScalar("1/2")
    report = bo.ell_search([half], 7)
    assert report.max_min_k == 9
    assert _texts(report.value_set) == ["-inf", "0", "1/2", "1", "3/2"]
    witness = MultiIdeal.single([(3, 0), (0, 7)], half)
    assert (witness, (7, 3)) in [(m, tuple(d)) for m, d in report.witnesses]


@pytest.mark.slow
def test_two_over_pi_needs_four():
    report = bo.ell_search([ExactScalar(0, 0, 2)], 6)
    assert report.max_min_k == 4
    assert _texts(report.value_set) == ["-inf", "2 - 6/pi", "4 - 12/pi", "3 - 8/pi", "2 - 4/pi", "2 - 2/pi"]


def test_exponent_three_is_never_log_canonical():
    report = bo.ell_search([3], 4)
    assert report.max_min_k == 1
    assert _texts(report.value_set) == ["-inf"]


def test_closed_form_values():
    exponents = ["1", "5/4", "3/2", "7/4", "2", "5/2", "3"]
    assert [bo.closed_form_ell(ExactScalar(e)) for e in exponents] == [4, 5, 3, 3, 2, 1, 1]


def test_half_exponent_witness_in_a_second_slot():
    half = ExactScalar("1/2")
    M = pad_multiideal(MultiIdeal.single([(3, 0), (0, 7)], half), [1, half])
    assert M.ideals[0].is_trivial
    result = mld(M)
    assert result.value is MINUS_INFINITY
    assert tuple(min_k_of(M, result)) == (7, 3)


@pytest.mark.slow
def test_values_of_one_and_a_half():
    half = ExactScalar("1/2")
    report = bo.ell_search([1, half], [3, 4])
    assert _texts(report.value_set) == ["-inf", "0", "1/2", "1", "3/2"]
    assert report.max_min_k <= 9


def test_non_positive_exponents_are_rejected():
    with pytest.raises(PreconditionError):
        bo.ell_search([0], 2)
    with pytest.raises(PreconditionError):
        bo.ell_search([], 2)
    with pytest.raises(PreconditionError):
        bo.ell_search([1, 1], [2])


if __name__ == '__main__':
    doctest.testmod(bo, verbose=True)
