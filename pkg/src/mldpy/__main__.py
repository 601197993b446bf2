"""
Runs the command line with `python -m mldpy`.
"""

__author__ = "MldPy developers"
__copyright__ = "Copyright (c) 2021, MldPy developers"
__credits__ = ["MldPy developers"]
__license__ = "MIT"
__version__ = "v1.0.0-alpha"
__maintainer__ = "MldPy developers"

from mldpy.cli import main

if __name__ == '__main__':
    main()
