"""Color closedness: pigeonhole test, then bounded exhaustive intersection."""

from __future__ import annotations

from ..catalog import DEFAULT_MAX_M, DEFAULT_MAX_N, generate_up_to
from ..coloring import states
from ..core import Multipole, make_minimal, reorder_semiedges
from ..formulas import known_constants, sigma
from .search import first_disjoint_ordering
from .verdict import AnalysisVerdict, Kind, Witness


def known_mu(m: int) -> int | None:
    if m in (2, 3):
        # a single admissible state: every colorable 2- or 3-pole realises it
        return 1
    return known_constants()["mu"].get(m)


def is_color_closed(mp: Multipole, n_max: int = DEFAULT_MAX_N) -> AnalysisVerdict:
    m = mp.m
    col = states(mp)
    bounds = {"m": m, "n_max": n_max}
    if not col:
        if m < 2:
            return AnalysisVerdict(Kind.CLOSED_UP_TO_BOUND, bound_meta=bounds,
                                   note="no Tait colorable 1-pole exists")
        return AnalysisVerdict(Kind.NOT_CLOSED, Witness(make_minimal(m), tuple(range(m))),
                               bound_meta=bounds, note="uncolorable")
    mu = known_mu(m)
    if mu is not None and len(col) > sigma(m) - mu:
        return AnalysisVerdict(Kind.CLOSED_SUFFICIENT, bound_meta={"m": m, "mu": mu, "sigma": sigma(m)})
    opponents = generate_up_to(m, n_max, colorable_only=True,
                               max_m=max(m, DEFAULT_MAX_M), max_n=max(n_max, DEFAULT_MAX_N))
    mu_b = min(len(e.state_set) for e in opponents)
    if len(col) > sigma(m) - mu_b:
        return AnalysisVerdict(Kind.CLOSED_UP_TO_BOUND, bound_meta={**bounds, "mu_bounded": mu_b},
                               note="pigeonhole against the bounded catalog")
    for entry in opponents:
        perm = first_disjoint_ordering(entry.state_set, col)
        if perm is not None:
            return AnalysisVerdict(
                Kind.NOT_CLOSED,
                Witness(reorder_semiedges(entry.multipole, perm), perm),
                bound_meta=bounds,
            )
    return AnalysisVerdict(Kind.CLOSED_UP_TO_BOUND, bound_meta=bounds)
