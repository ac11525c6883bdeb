"""Color completeness, junctions of complete multipoles, and the order n(m)."""

from __future__ import annotations

import itertools

from ..catalog import (DEFAULT_MAX_M, DEFAULT_MAX_N, CatalogEntry, CatalogQuery, generate,
                       generate_up_to)
from ..coloring import admissible_states, states
from ..core import JunctionSpec, Multipole, components, junction
from .verdict import AnalysisVerdict, Kind, Witness


def is_color_complete(mp: Multipole) -> AnalysisVerdict:
    if mp.m < 1:
        return AnalysisVerdict(Kind.NOT_COMPLETE, note="no semiedges")
    missing = admissible_states(mp.m).difference(states(mp))
    if not missing:
        return AnalysisVerdict(Kind.COMPLETE)
    return AnalysisVerdict(Kind.NOT_COMPLETE, Witness(state=missing.states[0]))


def complete_implies_connected_check(m_max: int = 6, n_max: int = 8) -> bool:
    """No disconnected entry of the bounded catalog is color complete."""
    for m in range(1, m_max + 1):
        for entry in generate_up_to(m, n_max, max_m=max(m_max, DEFAULT_MAX_M),
                                    max_n=max(n_max, DEFAULT_MAX_N)):
            if entry.component_count > 1 and is_color_complete(entry.multipole).holds:
                return False
    return True


def junction_state_feasibility(m1_counts: tuple[int, int, int], m2_counts: tuple[int, int, int],
                               r: int) -> tuple[int, int, int] | None:
    """Least (r1, r2, r3) with sum r and the per-color parity conditions of both sides.

    Side j keeps m^(j) = sum(mj_counts) outer semiedges; for each color i,
    mi^(j) + r_i must have the parity of m^(j) + r.
    """
    ma, mb = sum(m1_counts), sum(m2_counts)
    for split in itertools.product(range(r + 1), repeat=3):
        if sum(split) != r:
            continue
        if all((a + ri - ma - r) % 2 == 0 and (b + ri - mb - r) % 2 == 0
               for a, b, ri in zip(m1_counts, m2_counts, split)):
            return split
    return None


def outer_parity_condition(m1_counts: tuple[int, int, int], m2_counts: tuple[int, int, int]) -> bool:
    """mi^(1) + mi^(2) ≡ m^(1) + m^(2) (mod 2) for every color i."""
    total = sum(m1_counts) + sum(m2_counts)
    return all((a + b - total) % 2 == 0 for a, b in zip(m1_counts, m2_counts))


def junction_r_allowed(r: int) -> bool:
    return r >= 2 if r % 2 == 0 else r >= 3


def verify_junction_completeness(a: Multipole, b: Multipole, spec: JunctionSpec) -> bool:
    """Join two complete multipoles along ``spec`` and test the result for completeness."""
    r = spec.r
    if not junction_r_allowed(r):
        raise ValueError(f"r={r} not allowed: need r >= 2 (even) or r >= 3 (odd)")
    if a.m - r < 2 or b.m - r < 2:
        raise ValueError("each side must keep at least two semiedges")
    for side in (a, b):
        if not is_color_complete(side).holds:
            raise ValueError("both multipoles must be color complete")
    return is_color_complete(junction(a, b, spec)).holds


def complete_entries(m: int, n: int) -> list[CatalogEntry]:
    if n < 0 or (n - m) % 2:
        return []
    q = CatalogQuery(m, n, max_m=max(m, DEFAULT_MAX_M), max_n=max(n, DEFAULT_MAX_N))
    return [e for e in generate(q) if is_color_complete(e.multipole).holds]


def min_complete_order(m: int, n_max: int) -> tuple[int, Multipole] | None:
    """Smallest n <= n_max admitting a color complete m-pole, with the first such entry."""
    for n in range(m % 2, n_max + 1, 2):
        found = complete_entries(m, n)
        if found:
            return n, found[0].multipole
    return None


def mu_bounded(m: int, n_max: int) -> int:
    """Fewest states over the colorable m-poles with at most n_max vertices."""
    entries = generate_up_to(m, n_max, colorable_only=True,
                             max_m=max(m, DEFAULT_MAX_M), max_n=max(n_max, DEFAULT_MAX_N))
    if not entries:
        raise ValueError(f"no colorable {m}-pole with at most {n_max} vertices")
    return min(len(e.state_set) for e in entries)


def is_connected(mp: Multipole) -> bool:
    return components(mp).component_count <= 1
