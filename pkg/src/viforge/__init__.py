"""viforge: exact solvers, enumeration oracles and hardness-instance
generators for graphs whose structure collapses after deleting a small
separator."""

__version__ = "0.1.0"

from .graphs import Graph
from .integrity import ViSet, vertex_cover_min, vertex_integrity, vi_k_set

__all__ = [
    "Graph",
    "ViSet",
    "vertex_integrity",
    "vi_k_set",
    "vertex_cover_min",
    "__version__",
]
