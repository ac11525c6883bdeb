"""Tait colorings of multipoles and their semiedge states.

States are reported up to permutation of the three colors.  The canonical
representative of a state relabels colors by order of first appearance, so
every canonical state starts with color 1 and introduces 2 before 3.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

from .core import Attached, FreePaired, InvalidMultipole, Multipole, check, components

COLORS = (1, 2, 3)
_PERMS = tuple(itertools.permutations(COLORS))

State = tuple[int, ...]


@dataclass(frozen=True)
class TaitColoring:
    edge_colors: tuple[int, ...]
    semiedge_colors: tuple[int, ...]


@dataclass(frozen=True)
class KempeRequest:
    start: int
    color_pair: tuple[int, int]

    def __post_init__(self) -> None:
        a, b = self.color_pair
        if a == b or a not in COLORS or b not in COLORS:
            raise ValueError(f"bad color pair {self.color_pair}")


def canonical_state(state: Sequence[int]) -> State:
    seen: dict[int, int] = {}
    out = []
    for c in state:
        if c not in seen:
            seen[c] = len(seen) + 1
        out.append(seen[c])
    return tuple(out)


def parity_check(state: Sequence[int]) -> bool:
    m = len(state)
    return all((state.count(c) - m) % 2 == 0 for c in COLORS)


def color_permutations(state: Sequence[int]) -> set[State]:
    return {tuple(p[c - 1] for c in state) for p in _PERMS}


# ---------------------------------------------------------------------------
# bit-packed state sets
# ---------------------------------------------------------------------------

def _code(state: State) -> int:
    # the leading color of a canonical state is always 1, so skip it
    code = 0
    for c in state[1:]:
        code = code * 3 + (c - 1)
    return code


def _decode(code: int, m: int) -> State:
    digits = []
    for _ in range(m - 1):
        code, d = divmod(code, 3)
        digits.append(d + 1)
    return (1,) + tuple(reversed(digits)) if m else ()


@dataclass(frozen=True)
class StateSet:
    """Canonical states of a fixed length, one bit per canonical state.

    Bit k is set when the canonical state whose base-3 code (first color
    dropped) equals k is present.  Iteration is in lexicographic order.
    """

    m: int
    bits: int = 0

    @classmethod
    def from_states(cls, m: int, states: Iterable[Sequence[int]]) -> "StateSet":
        bits = 0
        for s in states:
            if len(s) != m:
                raise ValueError(f"state {tuple(s)} does not have length {m}")
            if not parity_check(s):
                raise ValueError(f"state {tuple(s)} violates the Parity Lemma")
            bits |= 1 << _code(canonical_state(s))
        return cls(m, bits)

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __bool__(self) -> bool:
        return self.bits != 0

    def __iter__(self) -> Iterator[State]:
        return iter(self.states)

    def __contains__(self, state: object) -> bool:
        if not isinstance(state, (tuple, list)) or len(state) != self.m:
            return False
        return bool(self.bits >> _code(canonical_state(state)) & 1)

    @cached_property
    def states(self) -> tuple[State, ...]:
        text = bin(self.bits)[2:][::-1]
        out = []
        k = text.find("1")
        while k >= 0:
            out.append(_decode(k, self.m))
            k = text.find("1", k + 1)
        return tuple(out)

    @cached_property
    def raw(self) -> frozenset[State]:
        """Every color-permuted tuple of every member."""
        return frozenset(t for s in self.states for t in color_permutations(s))

    def issubset(self, other: "StateSet") -> bool:
        return self.m == other.m and self.bits & ~other.bits == 0

    def intersects(self, other: "StateSet") -> bool:
        return self.m == other.m and self.bits & other.bits != 0

    def difference(self, other: "StateSet") -> "StateSet":
        return StateSet(self.m, self.bits & ~other.bits)

    def to_lines(self) -> list[str]:
        return ["".join(map(str, s)) for s in self.states]

    def to_json(self) -> dict:
        return {"m": self.m, "count": len(self), "states": self.to_lines()}


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

def _search(mp: Multipole, fixed: Mapping[int, int] | None = None,
            first_color: int | None = None) -> Iterator[list[int]]:
    """Depth-first search over edges then semiedges, colors ascending.

    Yields one color list per coloring (edges first, then semiedges), reusing
    the same list object; callers must copy.
    """
    E = len(mp.edges)
    fixed = dict(fixed or {})
    nvars = E + mp.m
    colors = [0] * nvars
    used = [0] * mp.vertex_count
    # per variable: endpoints, forced-equal variable, allowed colors
    ends: list[tuple[int, ...]] = []
    same_as: list[int] = []
    for u, v in mp.edges:
        ends.append((u, v))
        same_as.append(-1)
    for i, s in enumerate(mp.semiedges):
        if isinstance(s, Attached):
            ends.append((s.vertex,))
            same_as.append(-1)
        else:
            ends.append(())
            same_as.append(E + s.partner if s.partner < i else -1)
    allowed = []
    for k in range(nvars):
        choices = COLORS
        if k >= E and (k - E) in fixed:
            choices = (fixed[k - E],)
        if k == 0 and first_color is not None:
            choices = tuple(c for c in choices if c == first_color)
        allowed.append(choices)

    def rec(k: int) -> Iterator[list[int]]:
        if k == nvars:
            yield colors
            return
        tgt = same_as[k]
        for c in allowed[k]:
            if tgt >= 0 and colors[tgt] != c:
                continue
            bit = 1 << c
            if any(used[w] & bit for w in ends[k]):
                continue
            for w in ends[k]:
                used[w] |= bit
            colors[k] = c
            yield from rec(k + 1)
            for w in ends[k]:
                used[w] &= ~bit
        colors[k] = 0

    return rec(0)


def enumerate_colorings(mp: Multipole) -> Iterator[TaitColoring]:
    """Every Tait coloring exactly once, in lexicographic (edges, semiedges) order."""
    check(mp)
    E = len(mp.edges)
    for cols in _search(mp):
        yield TaitColoring(tuple(cols[:E]), tuple(cols[E:]))


def verify_coloring(mp: Multipole, phi: TaitColoring) -> bool:
    if len(phi.edge_colors) != len(mp.edges) or len(phi.semiedge_colors) != mp.m:
        return False
    seen: list[set[int]] = [set() for _ in range(mp.vertex_count)]
    count = [0] * mp.vertex_count
    for (u, v), c in zip(mp.edges, phi.edge_colors):
        if c not in COLORS:
            return False
        for w in (u, v):
            seen[w].add(c)
            count[w] += 1
    for i, (s, c) in enumerate(zip(mp.semiedges, phi.semiedge_colors)):
        if c not in COLORS:
            return False
        if isinstance(s, Attached):
            seen[s.vertex].add(c)
            count[s.vertex] += 1
        elif phi.semiedge_colors[s.partner] != c:
            return False
    return all(len(seen[u]) == count[u] for u in range(mp.vertex_count))


def _component_tuples(mp: Multipole, verts: Sequence[int], semis: Sequence[int],
                      canonical_only: bool) -> set[State]:
    """Semiedge color tuples of one component (restricted to ``semis``)."""
    local = {u: k for k, u in enumerate(verts)}
    pos = {i: k for k, i in enumerate(semis)}
    edges = tuple((local[u], local[v]) for u, v in mp.edges if u in local)
    sub_semis = []
    for i in semis:
        s = mp.semiedges[i]
        sub_semis.append(Attached(local[s.vertex]) if isinstance(s, Attached)
                         else FreePaired(pos[s.partner]))
    sub = Multipole(len(verts), edges, tuple(sub_semis))
    E = len(edges)
    out: set[State] = set()
    # colour-swap symmetry: pin the first variable to color 1
    first = 1 if (E + len(semis)) else None
    for cols in _search(sub, first_color=first):
        out.add(tuple(cols[E:]))
    if not canonical_only:
        out = {t for s in out for t in color_permutations(s)}
    return out


def states(mp: Multipole) -> StateSet:
    """Canonical semiedge states of all Tait colorings of ``mp``."""
    check(mp)
    comp = components(mp)
    parts = []
    first = True
    for verts, semis in sorted(zip(comp.vertex_sets, comp.semiedge_sets),
                               key=lambda p: (not p[1], p[1][:1])):
        tuples = _component_tuples(mp, verts, semis, canonical_only=first and bool(semis))
        if not tuples:
            return StateSet(mp.m)
        if semis:
            first = False
            parts.append((semis, tuples))
    bits = 0
    state = [0] * mp.m
    if not parts:
        return StateSet(mp.m, 1 if mp.m == 0 else 0)
    for combo in itertools.product(*(t for _, t in parts)):
        for (semis, _), tup in zip(parts, combo):
            for i, c in zip(semis, tup):
                state[i] = c
        bits |= 1 << _code(canonical_state(state))
    return StateSet(mp.m, bits)


def state_count(mp: Multipole) -> int:
    return len(states(mp))


def is_colorable(mp: Multipole) -> bool:
    return bool(states(mp))


def admissible_states(m: int) -> StateSet:
    """All canonical m-tuples satisfying the Parity Lemma."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    bits = 0

    def rec(prefix: list[int], top: int) -> None:
        nonlocal bits
        if len(prefix) == m:
            if parity_check(prefix):
                bits |= 1 << _code(tuple(prefix))
            return
        for c in range(1, min(top + 1, 3) + 1):
            prefix.append(c)
            rec(prefix, max(top, c))
            prefix.pop()

    rec([1], 1)
    return StateSet(m, bits)


# ---------------------------------------------------------------------------
# Kempe interchanges and realizability
# ---------------------------------------------------------------------------

def kempe_interchange(mp: Multipole, phi: TaitColoring, req: KempeRequest) -> TaitColoring:
    """Swap the two colors of ``req.color_pair`` along the chain from ``req.start``.

    From a semiedge the alternating chain is a path, so it always ends at
    another semiedge (or the partner half of a free edge).
    """
    a, b = req.color_pair
    edge_cols = list(phi.edge_colors)
    semi_cols = list(phi.semiedge_colors)
    i = req.start
    if not 0 <= i < mp.m:
        raise InvalidMultipole(f"semiedge {i} out of range")
    if semi_cols[i] not in (a, b):
        raise ValueError(f"semiedge {i} has color {semi_cols[i]}, not in {req.color_pair}")
    other = {a: b, b: a}
    s = mp.semiedges[i]
    if isinstance(s, FreePaired):
        semi_cols[i] = semi_cols[s.partner] = other[semi_cols[i]]
        return TaitColoring(tuple(edge_cols), tuple(semi_cols))
    incident: list[list[tuple[str, int]]] = [[] for _ in range(mp.vertex_count)]
    for k, (u, v) in enumerate(mp.edges):
        incident[u].append(("e", k))
        incident[v].append(("e", k))
    for k, t in enumerate(mp.semiedges):
        if isinstance(t, Attached):
            incident[t.vertex].append(("s", k))

    def color_of(item: tuple[str, int]) -> int:
        return edge_cols[item[1]] if item[0] == "e" else semi_cols[item[1]]

    want = other[semi_cols[i]]
    semi_cols[i] = want
    came: tuple[str, int] = ("s", i)
    u = s.vertex
    while True:
        # after swapping ``came``, the other element at u carrying ``want`` continues the chain
        nxt = next(it for it in incident[u] if it != came and color_of(it) == want)
        swapped = other[want]
        if nxt[0] == "s":
            semi_cols[nxt[1]] = swapped
            break
        edge_cols[nxt[1]] = swapped
        x, y = mp.edges[nxt[1]]
        u = y if x == u else x
        came, want = nxt, swapped
    return TaitColoring(tuple(edge_cols), tuple(semi_cols))


def realizable(mp: Multipole, pattern: Mapping[int, int]) -> bool:
    """True iff some Tait coloring has the given colors on the given semiedges."""
    check(mp)
    for i, c in pattern.items():
        if not 0 <= i < mp.m:
            raise InvalidMultipole(f"semiedge {i} out of range")
        if c not in COLORS:
            return False
    return next(_search(mp, fixed=pattern), None) is not None
