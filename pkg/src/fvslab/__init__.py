"""Feedback vertex sets of plane digraphs with prescribed digirth.

Plane digraphs with rotation systems, exact FVS solving, normal cycle
sets and their energies, valuations, coatings of plane skeletons,
fractional arboricity and the extremal graph families built from them.
"""

from __future__ import annotations

from .coatings import Coating, build_coating, search_coating_function, verify_recursive_digirth
from .fvs import FvsResult, fvs_exact
from .plane import DiCycle, PlaneDigraph, digirth
from .skeleton import Skeleton

__all__ = [
    "Coating",
    "DiCycle",
    "FvsResult",
    "PlaneDigraph",
    "Skeleton",
    "build_coating",
    "digirth",
    "fvs_exact",
    "search_coating_function",
    "verify_recursive_digirth",
]

__version__ = "0.1.0"
