from .permutation import Permutation, format_label, identity, parse, rank, swap_positions, unrank
from .cayley import CayleyGraph, CopyView, build
from .menger import DisjointPathSet, PathKind, disjoint_set_paths, fan, kappa, local_connectivity

__all__ = [
    "Permutation",
    "format_label",
    "identity",
    "parse",
    "rank",
    "swap_positions",
    "unrank",
    "CayleyGraph",
    "CopyView",
    "build",
    "DisjointPathSet",
    "PathKind",
    "disjoint_set_paths",
    "fan",
    "kappa",
    "local_connectivity",
]
