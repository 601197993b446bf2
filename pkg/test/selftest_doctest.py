import doctest
import mldpy.selftest as st

import pytest


def test_doctests():
    failures, _ = doctest.testmod(st)
    assert failures == 0


def test_quick_cases_pass():
    report = st.run_selftest(include_slow=False)
    assert report["failed"] == [], report["cases"]
    assert report["passed"] == len([case for case in st.PINNED_CASES if not case.slow])


@pytest.mark.slow
def test_pinned_table_passes():
    report = st.run_selftest()
    assert report["failed"] == [], report["cases"]
    assert report["passed"] == len(st.PINNED_CASES)


def test_slow_cases_are_marked():
    slow = [case.name for case in st.PINNED_CASES if case.slow]
    assert "l_e for e = 1/2 in the box 7" in slow
    assert "l_e for e = 2/pi in the box 6" in slow


def test_failures_are_reported():
    broken = st.PinnedCase("broken", "1", lambda: 1 / 0)
    report = st.run_selftest([broken, st.PINNED_CASES[0]])
    assert report["failed"] == ["broken"]
    assert report["cases"][0]["actual"] == "ZeroDivisionError: division by zero"


if __name__ == '__main__':
    doctest.testmod(st, verbose=True)
