"""
Argument checks and parallel helpers shared by the vknot subpackages.
"""

from ._checks import (
    check_diagram,
    check_chord,
    check_arc,
    check_max_chords,
    check_n_jobs,
)
from ._parallelize import parallel_loop

__all__ = [
    "check_diagram",
    "check_chord",
    "check_arc",
    "check_max_chords",
    "check_n_jobs",
    "parallel_loop",
]
