"""Decision procedures: completeness, closedness, reducibility, separability."""

from .closedness import is_color_closed, known_mu
from .completeness import (complete_implies_connected_check, complete_entries, is_color_complete,
                           junction_r_allowed, junction_state_feasibility, min_complete_order,
                           mu_bounded, outer_parity_condition, verify_junction_completeness)
from .reducibility import (forest_multipoles, is_reducible, is_separable, reduction_candidates,
                           tree_multipoles, v_lower_bound_report)
from .search import embeddings, first_disjoint_ordering, first_embedding
from .verdict import AnalysisVerdict, Kind, Witness

__all__ = [
    "AnalysisVerdict", "Kind", "Witness",
    "is_color_complete", "complete_implies_connected_check", "complete_entries",
    "junction_state_feasibility", "outer_parity_condition", "junction_r_allowed",
    "verify_junction_completeness", "min_complete_order", "mu_bounded",
    "is_color_closed", "known_mu",
    "is_reducible", "is_separable", "reduction_candidates", "tree_multipoles",
    "forest_multipoles", "v_lower_bound_report",
    "embeddings", "first_embedding", "first_disjoint_ordering",
]
