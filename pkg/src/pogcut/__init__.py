"""Short-row MaxCut models on K_z built from projective orbital graphs."""

from .gf2 import EdgeVector, Gf2Subspace
from .model import InequalitySystem, build_p0prime, build_p12, build_p2prime, count_report, v12
from .pog import Triad, build_triad, map_spaces
from .rozig import build_table, rotation_and_twist

__version__ = "0.1.0"

__all__ = [
    "EdgeVector",
    "Gf2Subspace",
    "InequalitySystem",
    "Triad",
    "build_p0prime",
    "build_p12",
    "build_p2prime",
    "build_table",
    "build_triad",
    "count_report",
    "map_spaces",
    "rotation_and_twist",
    "v12",
]
