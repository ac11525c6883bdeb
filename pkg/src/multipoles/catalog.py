"""Isomorph-free catalogs of cubic multipoles.

An m-pole up to isomorphism (semiedges unlabeled) is a multiset of connected
pieces: free edges, and connected loopless multigraphs with edge multiplicity
at most 2, maximum degree 3 and at least one vertex of degree < 3 (the
missing degree is filled with semiedges).  Connected pieces are grown from a
single vertex by adding a pendant vertex or an edge, deduplicated level by
level with canonical forms; catalogs are then assembled as multisets.

Loops and semiedge-free components are never generated: the former are not
Tait colorable, the latter do not change the state set.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator

from .canonical import canonical_labeling
from .coloring import StateSet, states
from .core import (Attached, CertificateMode, FreePaired, Multipole, canonical_certificate,
                   components)

DEFAULT_MAX_M = 8
DEFAULT_MAX_N = 10


class CatalogBoundsError(ValueError):
    pass


@dataclass(frozen=True)
class CatalogQuery:
    m: int
    n: int
    connected_only: bool = False
    colorable_only: bool = False
    max_m: int = DEFAULT_MAX_M
    max_n: int = DEFAULT_MAX_N

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 0:
            raise CatalogBoundsError(f"need m >= 1 and n >= 0, got m={self.m}, n={self.n}")
        if (self.n - self.m) % 2:
            raise CatalogBoundsError(f"n and m must have the same parity, got n={self.n}, m={self.m}")
        if self.m > self.max_m or self.n > self.max_n:
            raise CatalogBoundsError(
                f"query (m={self.m}, n={self.n}) exceeds bounds m <= {self.max_m}, n <= {self.max_n}")


@dataclass(frozen=True)
class CatalogEntry:
    multipole: Multipole
    certificate: bytes

    @cached_property
    def state_set(self) -> StateSet:
        return states(self.multipole)

    @property
    def digest(self) -> str:
        return hashlib.sha256(self.certificate).hexdigest()[:16]

    @property
    def component_count(self) -> int:
        return components(self.multipole).component_count


@dataclass(frozen=True)
class _Piece:
    """A connected piece in canonical vertex order; ``n == 0`` is the free edge."""

    n: int
    edges: tuple[tuple[int, int], ...]
    form: tuple
    semis: tuple[int, ...] = field(default=())  # semiedge count per vertex

    @property
    def s(self) -> int:
        return sum(self.semis) if self.n else 2


FREE_EDGE_PIECE = _Piece(0, (), (0, (), ()), ())


def _canonical_piece(n: int, edges: list[tuple[int, int]]) -> _Piece:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    form, order = canonical_labeling(n, edges, [0] * n)
    pos = {v: i for i, v in enumerate(order)}
    cedges = tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in edges))
    semis = tuple(3 - deg[v] for v in order)
    return _Piece(n, cedges, form, semis)


@lru_cache(maxsize=None)
def _pieces_level(n: int, e: int) -> tuple[_Piece, ...]:
    """Connected pieces with n vertices, e edges and at least one semiedge."""
    if n < 1 or e < n - 1 or 3 * n - 2 * e < 1:
        return ()
    if n == 1:
        return (_canonical_piece(1, []),) if e == 0 else ()
    found: dict[tuple, _Piece] = {}
    # grow by one edge
    for p in _pieces_level(n, e - 1):
        deg = [3 - s for s in p.semis]
        mult: dict[tuple[int, int], int] = {}
        for uv in p.edges:
            mult[uv] = mult.get(uv, 0) + 1
        for u in range(n):
            if deg[u] == 3:
                continue
            for v in range(u + 1, n):
                if deg[v] < 3 and mult.get((u, v), 0) < 2:
                    child = _canonical_piece(n, list(p.edges) + [(u, v)])
                    found.setdefault(child.form, child)
    # grow by one pendant vertex
    for p in _pieces_level(n - 1, e - 1):
        for u in range(n - 1):
            if p.semis[u]:
                child = _canonical_piece(n, list(p.edges) + [(u, n - 1)])
                found.setdefault(child.form, child)
    return tuple(found[k] for k in sorted(found))


def connected_pieces(n: int, s: int) -> tuple[_Piece, ...]:
    """Connected pieces with exactly n vertices and s semiedges."""
    if n == 0:
        return (FREE_EDGE_PIECE,) if s == 2 else ()
    if (3 * n - s) % 2 or s < 1:
        return ()
    return _pieces_level(n, (3 * n - s) // 2)


def _assemble(pieces: list[_Piece]) -> Multipole:
    edges: list[tuple[int, int]] = []
    semis: list = []
    off = 0
    for p in pieces:
        if p.n == 0:
            k = len(semis)
            semis += [FreePaired(k + 1), FreePaired(k)]
            continue
        edges += [(u + off, v + off) for u, v in p.edges]
        for v, cnt in enumerate(p.semis):
            semis += [Attached(v + off)] * cnt
        off += p.n
    return Multipole(off, tuple(edges), tuple(semis))


def _piece_key(p: _Piece) -> tuple:
    # vertex pieces first, free edges last
    return (p.n == 0, p.form)


def _multisets(m: int, n: int, connected_only: bool) -> Iterator[list[_Piece]]:
    kinds = sorted(
        {(pn, ps) for pn in range(0, n + 1) for ps in range(1, m + 1) if connected_pieces(pn, ps)}
    )
    pool = [p for pn, ps in kinds for p in connected_pieces(pn, ps)]
    pool.sort(key=_piece_key)
    if connected_only:
        yield from ([p] for p in pool if p.n == n and p.s == m)
        return

    def rec(start: int, rem_n: int, rem_s: int, acc: list[_Piece]) -> Iterator[list[_Piece]]:
        if rem_n == 0 and rem_s == 0:
            yield list(acc)
            return
        for k in range(start, len(pool)):
            p = pool[k]
            if p.n <= rem_n and p.s <= rem_s:
                acc.append(p)
                yield from rec(k, rem_n - p.n, rem_s - p.s, acc)
                acc.pop()

    yield from rec(0, n, m, [])


def generate(q: CatalogQuery) -> list[CatalogEntry]:
    """One representative per isomorphism class, sorted by certificate."""
    return list(_generate_cached(q.m, q.n, q.connected_only, q.colorable_only))


@lru_cache(maxsize=None)
def _generate_cached(m: int, n: int, connected_only: bool, colorable_only: bool) -> tuple[CatalogEntry, ...]:
    if colorable_only:
        base = _generate_cached(m, n, connected_only, False)
        return tuple(e for e in base if e.state_set)
    entries = []
    for pieces in _multisets(m, n, connected_only):
        mp = _assemble(pieces)
        entries.append(CatalogEntry(mp, canonical_certificate(mp, CertificateMode.IGNORE_SEMIEDGE_LABELS)))
    entries.sort(key=lambda e: e.certificate)
    return tuple(entries)


def generate_up_to(m: int, n_max: int, connected_only: bool = False, colorable_only: bool = False,
                   max_m: int = DEFAULT_MAX_M, max_n: int = DEFAULT_MAX_N) -> list[CatalogEntry]:
    """Union of ``generate`` over n <= n_max with n ≡ m (mod 2), ordered by (n, certificate)."""
    out: list[CatalogEntry] = []
    for n in range(m % 2, n_max + 1, 2):
        out.extend(generate(CatalogQuery(m, n, connected_only, colorable_only, max_m, max_n)))
    return out


def count(q: CatalogQuery) -> int:
    return len(generate(q))
