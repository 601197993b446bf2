"""
Python package that reads and writes the data of mldpy: the text forms of scalars, polynomials and multiideals, the
JSON and CSV reports and the configuration files.
"""

from .text import (
    ParseError, parse_scalar, parse_polynomial, parse_ideal, parse_monomial_ideal, parse_multiideal, format_scalar,
    format_polynomial, format_ideal, format_multiideal)
from .reports import to_json, write_json, emit_csv, witness_rows, reset_data_directory
from .config import parse_config, load_config, merge_options, CONFIG_ENV
