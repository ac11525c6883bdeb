"""Cubic multipoles: data model and structural operations.

A multipole has ``vertex_count`` vertices, a multiset of edges (no loops,
multiplicity at most 2) and an ordered list of semiedges.  A semiedge is
either attached to a vertex or paired with another semiedge to form a free
edge.  Semiedge order is significant: states are tuples indexed by it.

All values are immutable; every operation returns a new multipole.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence, Union

__all__ = [
    "Attached",
    "FreePaired",
    "Semiedge",
    "Multipole",
    "ComponentSummary",
    "JunctionSpec",
    "InvalidMultipole",
    "CertificateMode",
    "make_free_edge",
    "make_vertex_pole",
    "make_minimal",
    "make_tree",
    "make_cycle",
    "make_path_tree",
    "disjoint_union",
    "join",
    "junction",
    "cut_edge",
    "delete_semiedge_vertex",
    "semiedge_distance",
    "components",
    "is_forest",
    "validate",
    "check",
    "relabel",
    "reorder_semiedges",
    "canonical_certificate",
]

INF = float("inf")


class InvalidMultipole(ValueError):
    """Raised when an operation receives or would build an invalid multipole."""


@dataclass(frozen=True, order=True)
class Attached:
    vertex: int


@dataclass(frozen=True, order=True)
class FreePaired:
    partner: int


Semiedge = Union[Attached, FreePaired]


@dataclass(frozen=True)
class Multipole:
    vertex_count: int
    edges: tuple[tuple[int, int], ...] = ()
    semiedges: tuple[Semiedge, ...] = ()

    def __post_init__(self) -> None:
        # normalise edge orientation; order of the edge list is kept
        edges = tuple((min(u, v), max(u, v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "semiedges", tuple(self.semiedges))

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.semiedges)

    def degree(self, u: int) -> int:
        d = sum((a == u) + (b == u) for a, b in self.edges)
        return d + sum(1 for s in self.semiedges if isinstance(s, Attached) and s.vertex == u)

    def semiedges_at(self, u: int) -> list[int]:
        return [i for i, s in enumerate(self.semiedges) if isinstance(s, Attached) and s.vertex == u]

    def free_pairs(self) -> list[tuple[int, int]]:
        return [(i, s.partner) for i, s in enumerate(self.semiedges)
                if isinstance(s, FreePaired) and i < s.partner]

    def neighbors(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj


@dataclass(frozen=True)
class ComponentSummary:
    """Connected components of G[M]; each free edge is its own component."""

    component_count: int
    sizes: tuple[tuple[int, int], ...]  # (vertices, semiedges) per component
    vertex_sets: tuple[tuple[int, ...], ...] = ()
    semiedge_sets: tuple[tuple[int, ...], ...] = ()


@dataclass(frozen=True)
class JunctionSpec:
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", tuple((int(i), int(j)) for i, j in self.pairs))
        left = [i for i, _ in self.pairs]
        right = [j for _, j in self.pairs]
        if len(set(left)) != len(left) or len(set(right)) != len(right):
            raise InvalidMultipole("junction refs must be distinct on each side")

    @property
    def r(self) -> int:
        return len(self.pairs)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def make_free_edge() -> Multipole:
    return Multipole(0, (), (FreePaired(1), FreePaired(0)))


def make_vertex_pole() -> Multipole:
    return Multipole(1, (), (Attached(0),) * 3)


def make_minimal(m: int) -> Multipole:
    """Fewest-vertex m-pole: m/2 free edges, or the vertex pole plus (m-3)/2 free edges."""
    if m < 2:
        raise InvalidMultipole(f"minimal multipole needs m >= 2, got {m}")
    out = make_vertex_pole() if m % 2 else Multipole(0)
    for _ in range((m - 3) // 2 if m % 2 else m // 2):
        out = disjoint_union(out, make_free_edge())
    return out


def make_tree(parents: Sequence[int | None]) -> Multipole:
    """Tree multipole from a parent list; ``parents[root]`` is None or -1.

    Every vertex is padded with semiedges up to degree 3, in vertex order.
    """
    k = len(parents)
    if k < 1:
        raise InvalidMultipole("a tree needs at least one vertex")
    edges = []
    roots = 0
    for i, p in enumerate(parents):
        if p is None or p < 0:
            roots += 1
            continue
        if not 0 <= p < k or p == i:
            raise InvalidMultipole(f"bad parent {p} for vertex {i}")
        edges.append((p, i))
    if roots != 1 or len(edges) != k - 1:
        raise InvalidMultipole("parent list must have exactly one root")
    mp = Multipole(k, tuple(edges))
    if _component_labels(mp)[1] != 1:
        raise InvalidMultipole("parent list does not describe a tree")
    deg = Counter()
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    semis = []
    for u in range(k):
        if deg[u] > 3:
            raise InvalidMultipole(f"vertex {u} has degree {deg[u]} > 3")
        semis.extend([Attached(u)] * (3 - deg[u]))
    return Multipole(k, tuple(edges), tuple(semis))


def make_path_tree(k: int) -> Multipole:
    return make_tree([None] + list(range(k - 1)))


def make_cycle(m: int) -> Multipole:
    if m < 3:
        raise InvalidMultipole(f"cycle multipole needs m >= 3, got {m}")
    edges = tuple((i, (i + 1) % m) for i in range(m))
    return Multipole(m, edges, tuple(Attached(i) for i in range(m)))


# ---------------------------------------------------------------------------
# structural operations
# ---------------------------------------------------------------------------

def disjoint_union(a: Multipole, b: Multipole) -> Multipole:
    off, moff = a.vertex_count, a.m
    edges = a.edges + tuple((u + off, v + off) for u, v in b.edges)
    semis = a.semiedges + tuple(
        Attached(s.vertex + off) if isinstance(s, Attached) else FreePaired(s.partner + moff)
        for s in b.semiedges
    )
    return Multipole(a.vertex_count + b.vertex_count, edges, semis)


def _drop_semiedges(semis: list[Semiedge | None]) -> tuple[Semiedge, ...]:
    """Remove ``None`` slots, renumbering free-edge partners."""
    new_index = {}
    for i, s in enumerate(semis):
        if s is not None:
            new_index[i] = len(new_index)
    out = []
    for s in semis:
        if s is None:
            continue
        out.append(FreePaired(new_index[s.partner]) if isinstance(s, FreePaired) else s)
    return tuple(out)


def join(mp: Multipole, i: int, j: int) -> Multipole:
    """Join semiedges ``i`` and ``j`` of ``mp``.

    attached + attached gives an edge; attached + free absorbs the free edge
    (its partner becomes attached to that vertex); two halves of different free
    edges leave their partners as a new free edge; the two halves of a single
    free edge close up and vanish.
    """
    m = mp.m
    if not (0 <= i < m and 0 <= j < m):
        raise InvalidMultipole(f"semiedge refs {i}, {j} out of range for m={m}")
    if i == j:
        raise InvalidMultipole("cannot join a semiedge with itself")
    si, sj = mp.semiedges[i], mp.semiedges[j]
    semis: list[Semiedge | None] = list(mp.semiedges)
    edges = mp.edges
    if isinstance(si, Attached) and isinstance(sj, Attached):
        u, v = si.vertex, sj.vertex
        if u == v:
            raise InvalidMultipole(f"joining semiedges {i} and {j} would create a loop at {u}")
        if edges.count((min(u, v), max(u, v))) >= 2:
            raise InvalidMultipole(f"joining semiedges {i} and {j} would create a triple edge")
        edges = edges + ((u, v),)
    elif isinstance(si, FreePaired) and isinstance(sj, FreePaired):
        if si.partner != j:
            pi, pj = si.partner, sj.partner
            semis[pi] = FreePaired(pj)
            semis[pj] = FreePaired(pi)
    else:
        att, free = (si, sj) if isinstance(si, Attached) else (sj, si)
        semis[free.partner] = Attached(att.vertex)
    semis[i] = semis[j] = None
    return Multipole(mp.vertex_count, edges, _drop_semiedges(semis))


def _join_many(mp: Multipole, pairs: Iterable[tuple[int, int]]) -> Multipole:
    """Join several pairs given by indices into the original semiedge list."""
    ids = list(range(mp.m))
    for a, b in pairs:
        try:
            pa, pb = ids.index(a), ids.index(b)
        except ValueError:
            raise InvalidMultipole(f"semiedge {a} or {b} already consumed") from None
        mp = join(mp, pa, pb)
        ids = [x for x in ids if x not in (a, b)]
    return mp


def junction(a: Multipole, b: Multipole, spec: JunctionSpec) -> Multipole:
    for i, j in spec.pairs:
        if not (0 <= i < a.m and 0 <= j < b.m):
            raise InvalidMultipole(f"junction pair ({i}, {j}) out of range")
    u = disjoint_union(a, b)
    return _join_many(u, [(i, a.m + j) for i, j in spec.pairs])


def cut_edge(mp: Multipole, edge: tuple[int, int]) -> Multipole:
    u, v = min(edge), max(edge)
    try:
        k = mp.edges.index((u, v))
    except ValueError:
        raise InvalidMultipole(f"edge {edge} not present") from None
    edges = mp.edges[:k] + mp.edges[k + 1:]
    return Multipole(mp.vertex_count, edges, mp.semiedges + (Attached(u), Attached(v)))


def delete_semiedge_vertex(mp: Multipole, eps: int) -> Multipole:
    """Delete semiedge ``eps`` together with its vertex v.

    The two other slots at v become new semiedges appended at the end, edge
    endpoints first (by index), then former semiedges of v (by index).  If
    both other slots were semiedges they pair into a free edge; if exactly one
    was, it merges with the remaining edge into a single semiedge at the far
    endpoint.
    """
    s = mp.semiedges[eps]
    if not isinstance(s, Attached):
        raise InvalidMultipole(f"semiedge {eps} is not attached to a vertex")
    v = s.vertex
    others = [i for i in mp.semiedges_at(v) if i != eps]
    ends = sorted(b if a == v else a for a, b in mp.edges if v in (a, b))

    def shift(x: int) -> int:
        return x - (x > v)

    edges = tuple((shift(a), shift(b)) for a, b in mp.edges if v not in (a, b))
    semis: list[Semiedge | None] = list(mp.semiedges)
    for i in [eps] + others:
        semis[i] = None
    semis = [Attached(shift(x.vertex)) if isinstance(x, Attached) else x for x in semis]
    kept = list(_drop_semiedges(semis))
    k = len(kept)
    if len(others) == 2:
        kept += [FreePaired(k + 1), FreePaired(k)]
    elif len(others) == 1:
        kept.append(Attached(shift(ends[0])))
    else:
        kept += [Attached(shift(w)) for w in ends]
    return Multipole(mp.vertex_count - 1, edges, tuple(kept))


def relabel(mp: Multipole, perm: Sequence[int]) -> Multipole:
    """Rename vertex u to ``perm[u]``."""
    edges = tuple((perm[u], perm[v]) for u, v in mp.edges)
    semis = tuple(Attached(perm[s.vertex]) if isinstance(s, Attached) else s for s in mp.semiedges)
    return Multipole(mp.vertex_count, edges, semis)


def reorder_semiedges(mp: Multipole, order: Sequence[int]) -> Multipole:
    """New multipole whose semiedge i is the old semiedge ``order[i]``."""
    if sorted(order) != list(range(mp.m)):
        raise InvalidMultipole("order must be a permutation of the semiedges")
    inv = {old: new for new, old in enumerate(order)}
    semis = []
    for old in order:
        s = mp.semiedges[old]
        semis.append(FreePaired(inv[s.partner]) if isinstance(s, FreePaired) else s)
    return Multipole(mp.vertex_count, mp.edges, tuple(semis))


# ---------------------------------------------------------------------------
# queries
# ---------------------------------------------------------------------------

def semiedge_distance(mp: Multipole, i: int, j: int) -> float:
    """Graph distance between the vertices of two attached semiedges (inf across components)."""
    si, sj = mp.semiedges[i], mp.semiedges[j]
    if not (isinstance(si, Attached) and isinstance(sj, Attached)):
        raise InvalidMultipole("distance is only defined between attached semiedges")
    adj = mp.neighbors()
    dist = {si.vertex: 0}
    queue = deque([si.vertex])
    while queue:
        u = queue.popleft()
        if u == sj.vertex:
            return dist[u]
        for w in adj[u]:
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return INF


def _component_labels(mp: Multipole) -> tuple[list[int], int]:
    label = [-1] * mp.vertex_count
    adj = mp.neighbors()
    c = 0
    for r in range(mp.vertex_count):
        if label[r] >= 0:
            continue
        label[r] = c
        stack = [r]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if label[w] < 0:
                    label[w] = c
                    stack.append(w)
        c += 1
    return label, c


def components(mp: Multipole) -> ComponentSummary:
    label, c = _component_labels(mp)
    vsets: list[list[int]] = [[] for _ in range(c)]
    ssets: list[list[int]] = [[] for _ in range(c)]
    for u, lab in enumerate(label):
        vsets[lab].append(u)
    for i, s in enumerate(mp.semiedges):
        if isinstance(s, Attached):
            ssets[label[s.vertex]].append(i)
    for i, j in mp.free_pairs():
        vsets.append([])
        ssets.append([i, j])
    sizes = tuple((len(v), len(s)) for v, s in zip(vsets, ssets))
    return ComponentSummary(len(vsets), sizes, tuple(map(tuple, vsets)), tuple(map(tuple, ssets)))


def is_forest(mp: Multipole) -> bool:
    _, c = _component_labels(mp)
    return len(mp.edges) == mp.vertex_count - c


def validate(mp: Multipole) -> list[str]:
    """Every invariant violation of ``mp``; an empty list means valid."""
    problems = []
    n, m = mp.vertex_count, mp.m
    if n < 0:
        return ["negative vertex count"]
    for u, v in mp.edges:
        if not (0 <= u < n and 0 <= v < n):
            problems.append(f"vertex index: edge ({u}, {v}) out of range")
        elif u == v:
            problems.append(f"loop at vertex {u}")
    for (u, v), k in Counter(mp.edges).items():
        if k > 2:
            problems.append(f"multiplicity: edge ({u}, {v}) appears {k} times")
    for i, s in enumerate(mp.semiedges):
        if isinstance(s, Attached):
            if not 0 <= s.vertex < n:
                problems.append(f"vertex index: semiedge {i} attached to {s.vertex}")
        elif not 0 <= s.partner < m or s.partner == i:
            problems.append(f"free pairing: semiedge {i} has partner {s.partner}")
        elif not (isinstance(mp.semiedges[s.partner], FreePaired)
                  and mp.semiedges[s.partner].partner == i):
            problems.append(f"free pairing: semiedge {i} and {s.partner} are not mutual")
    if problems:
        return problems
    for u in range(n):
        d = mp.degree(u)
        if d != 3:
            problems.append(f"cubic condition: vertex {u} has degree {d}")
    if (n - m) % 2:
        problems.append(f"parity n≡m: n={n}, m={m}")
    if not problems:
        comp = components(mp)
        c = comp.component_count
        if n < m - 2 * c or (n == m - 2 * c) != is_forest(mp):
            problems.append("order bound: n >= m - 2c with equality iff forest")
    return problems


def check(mp: Multipole) -> Multipole:
    problems = validate(mp)
    if problems:
        raise InvalidMultipole("; ".join(problems))
    return mp


# ---------------------------------------------------------------------------
# canonical certificates
# ---------------------------------------------------------------------------

class CertificateMode(Enum):
    IGNORE_SEMIEDGE_LABELS = "ignore"
    RESPECT_SEMIEDGE_ORDER = "respect"


def canonical_certificate(mp: Multipole,
                          mode: CertificateMode = CertificateMode.IGNORE_SEMIEDGE_LABELS) -> bytes:
    """Bytes equal for two multipoles iff they are isomorphic.

    In ``RESPECT_SEMIEDGE_ORDER`` mode the isomorphism must also map semiedge i
    to semiedge i; otherwise semiedges are interchangeable.
    """
    from .canonical import canonical_form

    respect = mode is CertificateMode.RESPECT_SEMIEDGE_ORDER
    comp = components(mp)
    forms = []
    free = []
    for verts, semis in zip(comp.vertex_sets, comp.semiedge_sets):
        if not verts:
            free.append(tuple(semis))
            continue
        local = {u: k for k, u in enumerate(verts)}
        edges = [(local[u], local[v]) for u, v in mp.edges if u in local]
        if respect:
            colors = [tuple(mp.semiedges_at(u)) for u in verts]
        else:
            colors = [len(mp.semiedges_at(u)) for u in verts]
        forms.append(canonical_form(len(verts), edges, colors))
    forms.sort()
    tail = tuple(sorted(free)) if respect else len(free)
    return repr((mp.vertex_count, mp.m, tuple(forms), tail)).encode()
