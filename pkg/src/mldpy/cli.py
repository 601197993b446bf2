"""
The command line of mldpy. Every command reads a multiideal (or a list of exponents), runs the corresponding
computation and prints its JSON form on the standard output.

    mldpy mld "x^2, y^3 @ 1"
    mldpy lct "x @ 1"
    mldpy ell "1" --box 3 --out witnesses.csv
    mldpy selftest

The exit code is 0 on success, 2 on malformed input, 3 when a computation is called outside its precondition, 4 when a
report cannot be written and 1 on any other failure.
"""

__author__ = "MldPy developers"
__copyright__ = "Copyright (c) 2021, MldPy developers"
__credits__ = ["MldPy developers"]
__license__ = "MIT"
__version__ = "v1.0.0-alpha"
__maintainer__ = "MldPy developers"

from mldpy.__helpers import PreconditionError, FieldMismatchError, set_rng
from mldpy import geometry, invariants, lab
from mldpy.algebra.polynomials import CoefficientField, monomialize as _monomialize
from mldpy.invariants.multiideal import value_to_dict
from mldpy.invariants.discrepancy import min_k_of
from mldpy.io.text import ParseError, parse_multiideal, parse_scalar, format_ideal, format_multiideal
from mldpy.io.reports import to_json, write_json, emit_csv
from mldpy.io.config import load_config, merge_options
from mldpy.selftest import run_selftest

from fractions import Fraction

import warnings
import argparse
import logging
import sys

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_IO = 4

DEFAULT_BOX = 3


def _input_multiideal(text, options):
    """
    Parses the input of a monomial command: a polynomial multiideal is replaced by its monomialization, with a warning.
    """
    field = CoefficientField(options.get("char", 0))
    poly_multiideal = parse_multiideal(text, field)
    monomialized = not poly_multiideal.is_monomial
    if monomialized:
        warnings.warn("The input %s is not monomial; its monomialization is used." % poly_multiideal, RuntimeWarning)
    return poly_multiideal, monomialized


def _exponents(text):
    return [parse_scalar(item) for item in text.split(",")]


def _box(options):
    return options.get("box", DEFAULT_BOX)


def _ideal_to_dict(ideal):
    return {"text": format_ideal(ideal), "generators": [[int(m.ex), int(m.ey)] for m in ideal.generators]}


__init_dir__ = set(dir()) | {'__init_dir__'}


def mld(text, options):
    """
    The minimal log discrepancy with its computing divisor and certificate; polynomial input gives an upper bound.
    """
    poly_multiideal, monomialized = _input_multiideal(text, options)
    if monomialized:
        result = invariants.monomialized_upper_bound(poly_multiideal)
    else:
        result = invariants.mld(poly_multiideal.monomialized())
    out = result.to_dict()
    multiideal = poly_multiideal.monomialized()
    out["min_k_divisor"] = min_k_of(multiideal, result).to_dict()
    out["input"] = format_multiideal(poly_multiideal)
    return out


def lct(text, options):
    """
    The log canonical threshold with its computing ray.
    """
    poly_multiideal, monomialized = _input_multiideal(text, options)
    out = invariants.lct(poly_multiideal.monomialized()).to_dict()
    if monomialized:
        out["monomialized"] = True
    out["input"] = format_multiideal(poly_multiideal)
    return out


def monomialize(text, options):
    """
    The monomialization of every ideal of a polynomial multiideal.
    """
    poly_multiideal = parse_multiideal(text, CoefficientField(options.get("char", 0)))
    return {
        "input": format_multiideal(poly_multiideal),
        "ideals": [_ideal_to_dict(_monomialize(ideal)) for ideal, _ in poly_multiideal.pairs],
        "exponents": [str(e) for _, e in poly_multiideal.pairs],
        "monomialized": not poly_multiideal.is_monomial
    }


def upper_bound(text, options):
    """
    The minimal log discrepancy of the monomialization, an upper bound in the given coordinates.
    """
    poly_multiideal = parse_multiideal(text, CoefficientField(options.get("char", 0)))
    out = invariants.monomialized_upper_bound(poly_multiideal).to_dict()
    out["input"] = format_multiideal(poly_multiideal)
    return out


def coord_search(text, options):
    """
    The smallest monomialized upper bound over the coordinate changes of a bounded degree.
    """
    poly_multiideal = parse_multiideal(text, CoefficientField(options.get("char", 0)))
    pool = [Fraction(str(c)) for c in options.get("pool", ["0", "1", "-1"])]
    result, phi = invariants.coordinate_search(poly_multiideal, degree_bound=options.get("degree", 1), pool=pool,
                                               max_steps=options.get("max_steps", 1), n_jobs=options.get("jobs", 1))
    logger.info("the coordinate search gives an upper bound of the minimal log discrepancy only")
    out = result.to_dict()
    out["automorphism"] = repr(phi)
    out["input"] = format_multiideal(poly_multiideal)
    return out


def ell(text, options):
    """
    The exhaustive search of the bound of the computing divisors for the exponents e over the box M.
    """
    report = lab.ell_search(_exponents(text), _box(options), per_ideal_budget=options.get("budget"),
                            include_trivial=options.get("include_trivial", False), n_jobs=options.get("jobs", 1))
    return report


def value_set(text, options):
    """
    The minimal log discrepancies attained with the exponents e in the box M and where they stabilise.
    """
    return lab.value_set(_exponents(text), _box(options), include_trivial=options.get("include_trivial", True),
                         per_ideal_budget=options.get("budget"), n_jobs=options.get("jobs", 1))


def acc_probe(text, options):
    """
    The empirical ascending chain probe over exponents drawn from the given finite set.
    """
    return lab.acc_probe(_exponents(text), _box(options), samples=options.get("samples", 10),
                         slots=options.get("slots", 1), rng=options.get("seed"), n_jobs=options.get("jobs", 1))


def fan(text, options):
    """
    The refined normal fan of the Newton polygons with the Hilbert basis of every cone.
    """
    poly_multiideal, monomialized = _input_multiideal(text, options)
    multiideal = poly_multiideal.monomialized()
    refined = geometry.refined_fan(multiideal.polygons)
    out = {
        "input": format_multiideal(poly_multiideal),
        "rays": [[int(r[0]), int(r[1])] for r in refined.rays],
        "cones": [{"rays": [[int(u[0]), int(u[1])], [int(v[0]), int(v[1])]],
                   "hilbert_basis": [[int(h[0]), int(h[1])] for h in geometry.hilbert_basis(u, v)]}
                  for u, v in refined.cones],
        "polygons": [[[int(c) for c in vertex] for vertex in polygon.vertices] for polygon in multiideal.polygons]
    }
    if monomialized:
        out["monomialized"] = True
    return out


def oracle(text, options):
    """
    The brute force minimal log discrepancy and threshold over the box B, next to the fan computation.
    """
    poly_multiideal, monomialized = _input_multiideal(text, options)
    multiideal = poly_multiideal.monomialized()
    box = _box(options)
    found = invariants.brute_force_mld(multiideal, box)
    out = {
        "input": format_multiideal(poly_multiideal),
        "box": box,
        "brute_force": {"value": value_to_dict(found.value), "divisor": found.divisor.to_dict(),
                        "negative": bool(found.negative)},
        "brute_force_lct": invariants.brute_force_lct(multiideal, box).to_dict(),
        "mld": invariants.mld(multiideal).to_dict(),
        "lct": invariants.lct(multiideal).to_dict()
    }
    if monomialized:
        out["monomialized"] = True
    return out


def selftest(text, options):
    """
    Recomputes the pinned regression table.
    """
    return run_selftest(include_slow=not options.get("quick", False))


__commands__ = set(dir()) - __init_dir__
"""
Names of all the commands.
"""


def get_available_commands():
    """
    Returns a sorted list with the names of all the commands, as they are typed on the command line.

    Examples
    --------
    >>> get_available_commands()  # doctest: +NORMALIZE_WHITESPACE
    ['acc-probe', 'coord-search', 'ell', 'fan', 'lct', 'mld', 'monomialize', 'oracle', 'selftest', 'upper-bound',
     'value-set']

    Returns
    -------
    list[str]
    """
    return sorted(name.replace('_', '-') for name in __commands__)


def get_command(command_name):
    """
    Transforms the name of a command into the respective function if it exists.

    Parameters
    ----------
    command_name: str
        the name of the command, e.g. 'upper-bound'.

    Returns
    -------
    command: callable
        a function of the input text and the options.
    """
    if command_name in get_available_commands():
        return globals()[command_name.replace('-', '_')]
    else:
        raise ValueError("Command '%s' does not exist!" % command_name)


def build_parser():
    """
    The argument parser of the command line.

    Returns
    -------
    argparse.ArgumentParser
    """
    parser = argparse.ArgumentParser(prog="mldpy", description="Exact minimal log discrepancies and log canonical "
                                                               "thresholds of multiideals on the affine plane.")
    parser.add_argument("command", choices=get_available_commands(), help="the computation to run.")
    parser.add_argument("input", nargs="?", default="",
                        help="the multiideal, e.g. 'x^2, y^3 @ 1', or the exponents, e.g. '1, 1/2'.")
    parser.add_argument("--char", type=int, default=None, help="the characteristic of the coefficients (default: 0).")
    parser.add_argument("--box", type=int, default=None, help="the box size M of the searches and the oracles.")
    parser.add_argument("--budget", type=int, default=None, help="the maximum number of staircases per ideal.")
    parser.add_argument("--degree", type=int, default=None, help="the maximum degree of the coordinate changes.")
    parser.add_argument("--pool", type=lambda s: [c.strip() for c in s.split(",") if c.strip()], default=None,
                        help="the coefficients of the coordinate changes, e.g. '0,1,-1'.")
    parser.add_argument("--max-steps", type=int, default=None, dest="max_steps",
                        help="the maximum number of elementary coordinate changes.")
    parser.add_argument("--samples", type=int, default=None, help="the number of exponent tuples of the probe.")
    parser.add_argument("--slots", type=int, default=None, help="the length of the exponent tuples of the probe.")
    parser.add_argument("--seed", type=int, default=None, help="the seed of the random state.")
    parser.add_argument("--jobs", type=int, default=None, help="the number of parallel workers.")
    parser.add_argument("--out", type=str, default=None,
                        help="a file for the report; '.csv' saves the witness table of 'ell'.")
    parser.add_argument("--include-trivial", action="store_true", default=None, dest="include_trivial",
                        help="include the trivial multiideal in the searches.")
    parser.add_argument("--quick", action="store_true", default=None,
                        help="skip the selftest cases that enumerate large boxes.")
    parser.add_argument("--config", type=str, default=None, help="a configuration file (default: $MLDPY_CONFIG).")
    parser.add_argument("-v", "--verbose", action="store_true", help="log the progress on the standard error.")
    return parser


def _save(result, path):
    if path.lower().endswith(".csv"):
        if not isinstance(result, lab.EllReport):
            raise PreconditionError("Only the reports of 'ell' can be saved as CSV.")
        return emit_csv(result, path)
    return write_json(result, path)


def run(argv=None):
    """
    Runs one command line invocation and prints its result.

    Examples
    --------
    >>> run(["lct", "x @ 1"])  # doctest: +NORMALIZE_WHITESPACE
    {"exceptional": false, "input": "x @ 1", "ratio": {"denominator": {"a": "1", "b": "0", "c": "0"}, "numerator": "1"},
     "ray": [1, 0], "value": {"kind": "finite", "scalar": {"a": "1", "b": "0", "c": "0"}}}
    0
    >>> run(["mld", "x @ 0"])
    2
    >>> run(["mld", "x", "--char", "4"])
    3

    Parameters
    ----------
    argv: list[str], optional
        the arguments without the program name. Default is sys.argv[1:].

    Returns
    -------
    int
        the exit code.
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    logging.captureWarnings(True)

    try:
        options = merge_options(load_config(args.config), {
            key: getattr(args, key) for key in ["char", "box", "budget", "degree", "pool", "max_steps", "samples",
                                                "slots", "seed", "jobs", "out", "include_trivial", "quick"]})
        if "seed" in options:
            set_rng(options["seed"])
        CoefficientField(options.get("char", 0))

        result = get_command(args.command)(args.input, options)
        if "out" in options:
            logger.info("report saved in %s", _save(result, options["out"]))
        print(to_json(result))
    except ParseError as e:
        logger.error("parse error: %s", e)
        return EXIT_PARSE
    except (PreconditionError, FieldMismatchError) as e:
        logger.error("precondition violated: %s", e)
        return EXIT_PRECONDITION
    except OSError as e:
        logger.error("I/O failure: %s", e)
        return EXIT_IO
    except Exception as e:
        logger.exception("internal error: %s", e)
        return EXIT_INTERNAL

    if args.command == "selftest" and result["failed"]:
        return EXIT_INTERNAL
    return EXIT_OK


def main():
    sys.exit(run())
