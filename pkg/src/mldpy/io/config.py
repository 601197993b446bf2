"""
The configuration file of the command line: plain `key = value` lines with `#` comments. Its default path is taken
from the MLDPY_CONFIG environment variable and the flags of a command override its values.
"""

__author__ = "MldPy developers"
__copyright__ = "Copyright (c) 2021, MldPy developers"
__credits__ = ["MldPy developers"]
__license__ = "MIT"
__version__ = "v1.0.0-alpha"
__maintainer__ = "MldPy developers"

from ._helpers import PreconditionError

import configparser
import logging
import os

logger = logging.getLogger(__name__)

CONFIG_ENV = "MLDPY_CONFIG"
"""
The environment variable with the path of the default configuration file.
"""

_SECTION = "mldpy"


def _as_bool(text):
    text = text.strip().lower()
    if text in ("1", "yes", "true", "on"):
        return True
    if text in ("0", "no", "false", "off"):
        return False
    raise ValueError("not a boolean: %r" % text)


def _as_pool(text):
    return [item.strip() for item in text.split(",") if item.strip()]


CONFIG_KEYS = {
    "char": int,
    "box": int,
    "budget": int,
    "degree": int,
    "pool": _as_pool,
    "seed": int,
    "out": str,
    "include_trivial": _as_bool,
    "jobs": int,
    "max_steps": int,
    "samples": int,
    "slots": int
}
"""
The recognised keys with their value parsers.
"""


def parse_config(text, source="<config>"):
    """
    Parses the text of a configuration file.

    Examples
    --------
    >>> sorted(parse_config("char = 3\\n# box size\\nbox = 5\\ninclude_trivial = yes\\npool = 0, 1, -1").items())
    [('box', 5), ('char', 3), ('include_trivial', True), ('pool', ['0', '1', '-1'])]
    >>> parse_config("colour = red")
    Traceback (most recent call last):
        ...
    mldpy.__helpers.PreconditionError: Unknown key 'colour' in <config>.

    Parameters
    ----------
    text: str
    source: str, optional
        the name of the file, for the error messages.

    Returns
    -------
    dict
    """
    parser = configparser.ConfigParser(comment_prefixes=("#",), inline_comment_prefixes=("#",),
                                       interpolation=None)
    try:
        parser.read_string("[%s]\n%s" % (_SECTION, text), source=source)
    except configparser.Error as e:
        raise PreconditionError("Malformed configuration %s: %s" % (source, e))

    values = {}
    for key, raw in parser.items(_SECTION):
        if key not in CONFIG_KEYS:
            raise PreconditionError("Unknown key %r in %s." % (key, source))
        try:
            values[key] = CONFIG_KEYS[key](raw)
        except ValueError:
            raise PreconditionError("Invalid value %r for the key %r in %s." % (raw, key, source))
    return values


def load_config(path=None):
    """
    Loads a configuration file. Without a path, the file named by MLDPY_CONFIG is loaded, if any.

    Parameters
    ----------
    path: str, optional

    Returns
    -------
    dict
        the parsed values; empty when there is no configuration file.
    """
    if path is None:
        path = os.environ.get(CONFIG_ENV)
        if not path:
            return {}
    with open(path, 'r', encoding='utf-8') as f:
        values = parse_config(f.read(), source=path)
    logger.debug("loaded %d configuration values from %s", len(values), path)
    return values


def merge_options(config, flags):
    """
    Combines the configuration values with the command line flags; the flags that are set win.

    Examples
    --------
    >>> sorted(merge_options({"char": 3, "box": 5}, {"box": 7, "budget": None}).items())
    [('box', 7), ('char', 3)]

    Parameters
    ----------
    config: dict
    flags: dict

    Returns
    -------
    dict
    """
    options = dict(config)
    options.update({key: value for key, value in flags.items() if value is not None})
    return options
