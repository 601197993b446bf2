import doctest
import json
import os
import mldpy.io.reports as rp

from mldpy.algebra.scalars import ExactScalar
from mldpy.invariants.multiideal import MultiIdeal
from mldpy.invariants.discrepancy import mld
from mldpy.lab.bounds import ell_search


def test_doctests():
    failures, _ = doctest.testmod(rp)
    assert failures == 0


def test_witness_table(tmp_path):
    report = ell_search([1], 3)
    path = rp.emit_csv(report, str(tmp_path / "ell.csv"))
    with open(path, encoding="utf-8") as f:
        lines = f.read().splitlines()
    assert lines[0] == ",".join(rp.CSV_HEADER)
    assert len(lines) == len(report.witnesses) + 1
    assert "\"y^3, x^2\",1,-inf,3,2,4" in lines[1:]


def test_empty_report_has_only_the_header(tmp_path):
    report = ell_search([1], 3, per_ideal_budget=0)
    assert report.witnesses == []
    path = rp.emit_csv(report, str(tmp_path / "empty.csv"))
    with open(path, encoding="utf-8") as f:
        assert f.read() == ",".join(rp.CSV_HEADER) + "\n"


def test_files_are_byte_identical(tmp_path):
    first = rp.emit_csv(ell_search([1, ExactScalar("1/2")], 2), str(tmp_path / "a.csv"))
    second = rp.emit_csv(ell_search([1, ExactScalar("1/2")], 2, n_jobs=2), str(tmp_path / "b.csv"))
    with open(first, "rb") as a, open(second, "rb") as b:
        assert a.read() == b.read()

    result = mld(MultiIdeal.single([(3, 0), (0, 4)], ExactScalar(0, 0, 2)))
    first, second = rp.write_json(result, str(tmp_path / "a.json")), rp.write_json(result, str(tmp_path / "b.json"))
    with open(first, "rb") as a, open(second, "rb") as b:
        assert a.read() == b.read()


def test_json_is_sorted_and_readable(tmp_path):
    result = mld(MultiIdeal.single([(2, 0), (0, 3)]))
    text = rp.to_json(result)
    data = json.loads(text)
    assert text == json.dumps(data, sort_keys=True)
    assert data["value"] == {"kind": "minus_infinity"}
    assert data["divisor"] == {"p": [3, 2], "k": 4}


def test_relative_names_go_to_the_data_directory(tmp_path):
    try:
        rp.reset_data_directory(str(tmp_path / "reports"))
        path = rp.write_json({"answer": 42}, "answer.json")
        assert path == os.path.join(str(tmp_path / "reports"), "answer.json")
        with open(path, encoding="utf-8") as f:
            assert json.load(f) == {"answer": 42}
    finally:
        rp.reset_data_directory()
    assert rp.__data_dir__.endswith(os.path.join("data", "reports"))


if __name__ == '__main__':
    doctest.testmod(rp, verbose=True)
