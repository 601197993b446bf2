"""
Saving the results and the experiment reports: JSON for every result and CSV for the witness tables of the bound
searches. Both are deterministic, so identical inputs give byte-identical files.
"""

__author__ = "MldPy developers"
__copyright__ = "Copyright (c) 2021, MldPy developers"
__credits__ = ["MldPy developers"]
__license__ = "MIT"
__version__ = "v1.0.0-alpha"
__maintainer__ = "MldPy developers"

from .text import format_ideal, format_scalar

import numpy as np
import json
import csv
import os


__dir__ = os.path.dirname(os.path.realpath(__file__))
"""
The local directory.
"""

__data_dir__ = os.path.abspath(os.path.join(__dir__, '..', '..', '..', 'data', 'reports'))
"""
Directory holding the reports.
"""

CSV_HEADER = ["generators", "exponents", "mld", "divisor_p1", "divisor_p2", "k"]
"""
The columns of the witness tables.
"""


def reset_data_directory(path=None):
    """
    Changes the directory where the reports with relative file names are saved.

    Parameters
    ----------
    path: str, optional
        the new directory. If None, the default {ROOT}/data/reports is restored.
    """
    global __data_dir__
    if path is None:
        path = os.path.join(__dir__, '..', '..', '..', 'data', 'reports')
    __data_dir__ = os.path.abspath(path)


def _resolve(filename):
    if os.path.isabs(filename) or os.path.dirname(filename):
        return filename
    return os.path.join(__data_dir__, filename)


def _default(value):
    if isinstance(value, np.integer):
        return int(value)
    if hasattr(value, "to_dict"):
        return value.to_dict()
    raise TypeError("Object of type %s is not JSON serialisable." % type(value).__name__)


def to_json(result):
    """
    The JSON text of a result, with sorted keys.

    Examples
    --------
    >>> from mldpy.invariants import mld, MultiIdeal
    >>> print(to_json(mld(MultiIdeal.single([(1, 0), (0, 1)])).to_dict()["value"]))
    {"kind": "finite", "scalar": {"a": "0", "b": "0", "c": "0"}}

    Parameters
    ----------
    result: dict | object
        a dictionary or an object with a to_dict method.

    Returns
    -------
    str
    """
    if hasattr(result, "to_dict"):
        result = result.to_dict()
    return json.dumps(result, sort_keys=True, default=_default)


def write_json(result, filename):
    """
    Saves the JSON text of a result. Relative names without a directory are saved in {ROOT}/data/reports.

    Parameters
    ----------
    result: dict | object
    filename: str

    Returns
    -------
    str
        the path of the file.
    """
    path = _resolve(filename)
    directory = os.path.dirname(path)
    if directory and not os.path.exists(directory):
        os.makedirs(directory)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(to_json(result))
        f.write('\n')
    return path


def witness_rows(report):
    """
    The rows of the witness table of a bound search report, sorted by the generators text.

    Parameters
    ----------
    report: EllReport

    Returns
    -------
    list[list[str]]
    """
    rows = []
    for (multiideal, divisor), value in zip(report.witnesses, report.witness_values):
        rows.append([" ; ".join(format_ideal(ideal) for ideal in multiideal.ideals),
                     " ; ".join(format_scalar(e) for e in multiideal.exponents),
                     str(value), str(divisor.p1), str(divisor.p2), str(divisor.k)])
    return sorted(rows)


def emit_csv(report, filename):
    """
    Saves the witness table of a bound search report as a UTF-8 CSV file with the header
    generators, exponents, mld, divisor_p1, divisor_p2, k and one row per witness.

    Parameters
    ----------
    report: EllReport
    filename: str
        relative names without a directory are saved in {ROOT}/data/reports.

    Returns
    -------
    str
        the path of the file.
    """
    path = _resolve(filename)
    directory = os.path.dirname(path)
    if directory and not os.path.exists(directory):
        os.makedirs(directory)
    with open(path, 'w', encoding='utf-8', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(CSV_HEADER)
        writer.writerows(witness_rows(report))
    return path
