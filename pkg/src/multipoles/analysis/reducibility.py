"""Reducibility and separability by exhaustive catalog search, and v(m) lower bounds.

A catalog of all m-poles with fewer vertices is finite, so an exhausted
search is a proof of irreducibility.  Candidates with semiedge-free
components are skipped: dropping such a component keeps the state set and
lowers the vertex count, so it never yields a new witness.
"""

from __future__ import annotations

from ..catalog import DEFAULT_MAX_M, DEFAULT_MAX_N, CatalogEntry, CatalogQuery, generate, generate_up_to
from ..coloring import StateSet, states
from ..core import Multipole, components, is_forest, make_cycle, reorder_semiedges
from ..formulas import known_constants, v_lower_bound
from .search import first_embedding
from .verdict import AnalysisVerdict, Kind, Witness


def _bounds(m: int, n: int) -> dict:
    return {"max_m": max(m, DEFAULT_MAX_M), "max_n": max(n, DEFAULT_MAX_N)}


def _first_witness(candidates: list[CatalogEntry], col: StateSet) -> Witness | None:
    for entry in candidates:
        perm = first_embedding(entry.state_set, col)
        if perm is not None:
            return Witness(reorder_semiedges(entry.multipole, perm), perm)
    return None


def reduction_candidates(m: int, n: int) -> list[CatalogEntry]:
    if n < 2:
        return []
    return generate_up_to(m, n - 2, colorable_only=True, **_bounds(m, n))


def is_reducible(mp: Multipole) -> AnalysisVerdict:
    m, n = mp.m, mp.n
    col = states(mp)
    meta = {"m": m, "candidate_n_max": n - 2, "candidates": "all colorable m-poles with fewer vertices"}
    if not col:
        return AnalysisVerdict(Kind.IRREDUCIBLE, bound_meta=meta, note="uncolorable")
    if m < 1:
        return AnalysisVerdict(Kind.IRREDUCIBLE, bound_meta=meta)
    witness = _first_witness(reduction_candidates(m, n), col)
    if witness is not None:
        return AnalysisVerdict(Kind.REDUCIBLE, witness, bound_meta=meta)
    return AnalysisVerdict(Kind.IRREDUCIBLE, bound_meta=meta)


def is_separable(mp: Multipole) -> AnalysisVerdict:
    m, n = mp.m, mp.n
    c = components(mp).component_count
    col = states(mp)
    meta = {"m": m, "n": n, "components": c,
            "candidates": "colorable m-poles with the same order and more components"}
    if not col or m < 1:
        return AnalysisVerdict(Kind.NOT_SEPARABLE, bound_meta=meta,
                               note="uncolorable" if not col else "")
    q = CatalogQuery(m, n, colorable_only=True, **_bounds(m, n))
    cands = [e for e in generate(q) if e.component_count > c]
    witness = _first_witness(cands, col)
    if witness is not None:
        return AnalysisVerdict(Kind.SEPARABLE, witness, bound_meta=meta)
    return AnalysisVerdict(Kind.NOT_SEPARABLE, bound_meta=meta)


def tree_multipoles(m: int) -> list[Multipole]:
    """Every connected tree m-pole up to isomorphism (the free edge for m = 2)."""
    if m < 2:
        return []
    q = CatalogQuery(m, m - 2, connected_only=True, **_bounds(m, m - 2))
    return [e.multipole for e in generate(q) if is_forest(e.multipole)]


def forest_multipoles(m: int) -> list[Multipole]:
    out = []
    for n in range(m % 2, m - 1, 2):
        q = CatalogQuery(m, n, **_bounds(m, n))
        out += [e.multipole for e in generate(q) if is_forest(e.multipole)]
    return out


def v_lower_bound_report(m_max: int) -> dict:
    """Irreducibility of trees and cycles for 2 <= m <= m_max and the v(m) bounds they imply."""
    known = known_constants()
    rows = []
    ok = True
    for m in range(2, m_max + 1):
        trees = tree_multipoles(m)
        trees_irreducible = all(not is_reducible(t).holds for t in trees)
        cycle_irreducible = None
        if m >= 3:
            cycle_irreducible = not is_reducible(make_cycle(m)).holds
        implied = m - 2 if trees_irreducible else None
        if cycle_irreducible and (implied is None or m > implied):
            implied = m
        exact = known["v"].get(m)
        expected_cycle = m >= 5
        consistent = (trees_irreducible
                      and (m < 3 or cycle_irreducible == expected_cycle)
                      and (exact is None or implied is None or implied <= exact))
        ok = ok and consistent
        rows.append({
            "m": m,
            "trees": len(trees),
            "trees_irreducible": trees_irreducible,
            "cycle_irreducible": cycle_irreducible,
            "implied_lower_bound": implied,
            "known_exact": exact,
            "known_lower": known["v_lower"].get(m),
            "best_lower_bound": v_lower_bound(m),
            "consistent": consistent,
        })
    return {"rows": rows, "ok": ok}
