"""Exact combinatorics for straight and ordinary ménage permutations.

The package is split by concern:

* :mod:`menage_kit.perm` -- permutations, their statistics and enumeration
* :mod:`menage_kit.reduce` -- fixed-point removal and (generalized) succession gluing
* :mod:`menage_kit.catalan` -- noncrossing partitions and nice bijections
* :mod:`menage_kit.expand` -- constructive inverse of reduction
* :mod:`menage_kit.series` -- exact truncated power series and closed forms
* :mod:`menage_kit.cycles` -- counts refined by number of cycles, colored permutations
* :mod:`menage_kit.cli` -- the ``menage-kit`` command line tool
"""

from menage_kit.perm import (
    LimitExceeded,
    ParseError,
    Permutation,
    PermStats,
    enumerate_sn,
    format_perm,
    is_ordinary_menage,
    is_straight_menage,
    parse,
    stats,
)

__version__ = "0.1.0"

__all__ = [
    "LimitExceeded",
    "ParseError",
    "Permutation",
    "PermStats",
    "enumerate_sn",
    "format_perm",
    "is_ordinary_menage",
    "is_straight_menage",
    "parse",
    "stats",
]
