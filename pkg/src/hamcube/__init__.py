"""Exact M-constants, maximal measures and inverse distance-matrix sums for
subsets of the Hamming cube."""

from .exactla import RatMatrix, determinant, inverse, rank, solve
from .hamming import (DistMatrix, HammingPoint, HammingPointSet, UnweightedTree,
                      distance_matrix, full_cube, random_subset, tree_to_cube)
from .mconst import (Measure, MConstResult, Route, energy, mconst_inverse_route,
                     mconst_reduced, mconst_solveb_route, potential, verify_maximality)
from .geometry import circumsphere, mconst_circumcenter, mconst_geometric

__version__ = "0.1.0"
