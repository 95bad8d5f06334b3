"""Exact common tangent hyperplanes to families of convex polytopes."""

from .polytope import OrientedHyperplane, Polytope, convex_hull
from .separation import Family, is_strongly_separated
from .tangents import Partition, all_tangents, brute_force_tangents, sandwich_tangents

__all__ = [
    "Family",
    "OrientedHyperplane",
    "Partition",
    "Polytope",
    "all_tangents",
    "brute_force_tangents",
    "convex_hull",
    "is_strongly_separated",
    "sandwich_tangents",
]
__version__ = "0.1.0"
