"""Cubic multipoles, their Tait-coloring state sets, and exhaustive catalog analyses."""

from .coloring import StateSet, admissible_states, states
from .core import (Multipole, disjoint_union, join, junction, make_cycle, make_free_edge,
                   make_minimal, make_path_tree, make_tree, make_vertex_pole)
from .mpole_io import parse_mpole, write_mpole

__all__ = [
    "Multipole", "StateSet", "states", "admissible_states",
    "make_free_edge", "make_vertex_pole", "make_minimal", "make_tree", "make_path_tree",
    "make_cycle", "disjoint_union", "join", "junction", "parse_mpole", "write_mpole",
]
