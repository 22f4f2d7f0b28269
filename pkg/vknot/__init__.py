"""
Intersection polynomials of virtual knots.

``vknot`` computes the writhe polynomial and the first, second and third
intersection polynomials of virtual knots presented by Gauss codes. It also
ships a Reidemeister move engine used to check invariance, the symmetry and
crossing number estimates built on these polynomials, and a command line
interface to generate knot tables.

Subpackages
-----------
laurent
diagram
intersect
invariants
moves
knotcli
utils
"""

import sys

try:
    # This variable is injected in the __builtins__ by the build
    # process. It is used to enable importing subpackages of vknot when
    # the package metadata is being collected by setup.py
    # mypy error: Cannot determine type of '__VKNOT_SETUP__'
    __VKNOT_SETUP__  # type: ignore
except NameError:
    __VKNOT_SETUP__ = False

if __VKNOT_SETUP__:
    sys.stderr.write("Partial import of vknot during the build process.\n")
    # We are not importing the rest of vknot during the build
    # process, as its dependencies may not be installed yet
else:
    from . import laurent
    from . import diagram
    from . import intersect
    from . import invariants
    from . import moves
    from . import knotcli
    from . import utils
    from .base import IntersectionPolynomials
    from ._version import __version__

    __all__ = [
        "laurent",
        "diagram",
        "intersect",
        "invariants",
        "moves",
        "knotcli",
        "utils",
        # Non-modules:
        "IntersectionPolynomials",
        "__version__",
    ]
