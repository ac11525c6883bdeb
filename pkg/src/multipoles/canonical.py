"""Canonical forms of small vertex-colored multigraphs.

Plain individualization-refinement: refine an ordered partition to an
equitable one, branch on every vertex of the first smallest non-trivial cell,
and keep the lexicographically least encoding over all leaves.  No
automorphism pruning; the graphs handled here are connected, subcubic and
have at most a few dozen vertices.
"""

from __future__ import annotations

from typing import Hashable, Sequence

Form = tuple


def _refine(cells: list[list[int]], adj: list[dict[int, int]]) -> list[list[int]]:
    while True:
        cell_of = {}
        for k, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = k
        new_cells: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                sig = tuple(sorted((cell_of[w], k) for w, k in adj[v].items()))
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        cells = new_cells
        if not changed:
            return cells


def _encode(order: list[int], adj: list[dict[int, int]], colors: Sequence[Hashable]) -> Form:
    pos = {v: i for i, v in enumerate(order)}
    edges = sorted(
        (min(pos[u], pos[w]), max(pos[u], pos[w]), k)
        for u in order for w, k in adj[u].items() if pos[u] < pos[w]
    )
    return (len(order), tuple(colors[v] for v in order), tuple(edges))


def canonical_labeling(n: int, edges: Sequence[tuple[int, int]],
                       colors: Sequence[Hashable]) -> tuple[Form, list[int]]:
    """Return (canonical form, vertex order realising it)."""
    adj: list[dict[int, int]] = [dict() for _ in range(n)]
    for u, v in edges:
        adj[u][v] = adj[u].get(v, 0) + 1
        adj[v][u] = adj[v].get(u, 0) + 1
    by_color: dict[Hashable, list[int]] = {}
    for v in range(n):
        by_color.setdefault(colors[v], []).append(v)
    cells = [by_color[c] for c in sorted(by_color)]
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(cells, adj)
        target = None
        for k, cell in enumerate(cells):
            if len(cell) > 1 and (target is None or len(cell) < len(cells[target])):
                target = k
        if target is None:
            order = [c[0] for c in cells]
            form = _encode(order, adj, colors)
            if best[0] is None or form < best[0]:
                best[0], best[1] = form, order
            return
        cell = cells[target]
        for v in cell:
            rest = [w for w in cell if w != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    if n == 0:
        return (0, (), ()), []
    search(cells)
    return best[0], best[1]


def canonical_form(n: int, edges: Sequence[tuple[int, int]], colors: Sequence[Hashable]) -> Form:
    return canonical_labeling(n, edges, colors)[0]
