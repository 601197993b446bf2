"""
Exact computation of minimal log discrepancies (mld) and log canonical thresholds (lct) of multiideals at the origin
of the affine plane, over Q or F_p, through the Newton polygons of monomial ideals. It is split in 5 sub-packages:
**algebra**, **geometry**, **invariants**, **lab** and **io**; which are responsible for the exact arithmetic, the
polyhedral geometry, the singularity invariants, the enumeration experiments and the data handling respectively.
"""

__author__ = "MldPy developers"
__copyright__ = "Copyright (c) 2021, MldPy developers"
__credits__ = ["MldPy developers"]
__license__ = "MIT"
__version__ = "v1.0.0-alpha"
__maintainer__ = "MldPy developers"

import mldpy.algebra
import mldpy.geometry
import mldpy.invariants
import mldpy.lab
import mldpy.io
