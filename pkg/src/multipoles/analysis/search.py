"""Searches over semiedge orderings of a candidate multipole."""

from __future__ import annotations

import itertools
from collections import Counter
from typing import Iterator

from ..coloring import StateSet


def _profile(state: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(Counter(state).values()))


def _prefix_sets(raw: frozenset[tuple[int, ...]], m: int) -> list[set[tuple[int, ...]]]:
    return [{t[:k] for t in raw} for k in range(m + 1)]


def embeddings(sub: StateSet, sup: StateSet) -> Iterator[tuple[int, ...]]:
    """Orderings pi (lexicographic) with every state of ``sub`` read through pi a state of ``sup``.

    ``pi[i]`` is the semiedge of the sub-multipole placed at position i.
    """
    m = sub.m
    if sub.m != sup.m or len(sub) > len(sup) or not sub:
        return
    if not {_profile(s) for s in sub.states} <= {_profile(s) for s in sup.states}:
        return
    prefixes = _prefix_sets(sup.raw, m)
    rows = sub.states
    used = [False] * m
    perm: list[int] = []

    def rec(partials: list[tuple[int, ...]]) -> Iterator[tuple[int, ...]]:
        k = len(perm)
        if k == m:
            yield tuple(perm)
            return
        allowed = prefixes[k + 1]
        for p in range(m):
            if used[p]:
                continue
            nxt = [pt + (s[p],) for pt, s in zip(partials, rows)]
            if all(t in allowed for t in nxt):
                used[p] = True
                perm.append(p)
                yield from rec(nxt)
                perm.pop()
                used[p] = False

    yield from rec([()] * len(rows))


def first_embedding(sub: StateSet, sup: StateSet) -> tuple[int, ...] | None:
    return next(embeddings(sub, sup), None)


def first_disjoint_ordering(other: StateSet, target: StateSet) -> tuple[int, ...] | None:
    """Least ordering pi for which no state of ``other`` read through pi lies in ``target``."""
    raw = target.raw
    rows = other.states
    for perm in itertools.permutations(range(other.m)):
        if not any(tuple(s[p] for p in perm) in raw for s in rows):
            return perm
    return None
