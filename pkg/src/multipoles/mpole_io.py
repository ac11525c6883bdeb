"""The line-oriented ``.mpole`` text format.

::

    vertices <n>          first non-comment line
    edge <u> <v>          one edge, 0 <= u, v < n, u != v
    semi <u>              append one semiedge attached to u
    free                  append two semiedges forming a free edge
    half <k>              append one free-edge half whose partner is semiedge k

``#`` starts a comment.  ``half`` only appears when the two halves of a free
edge are not adjacent in the semiedge order (as after some joins).
"""

from __future__ import annotations

from collections import Counter

from .core import Attached, FreePaired, Multipole, validate


class MpoleParseError(ValueError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise MpoleParseError(lineno, f"expected an integer, got {tok!r}") from None


def parse_mpole(text: str) -> Multipole:
    n = None
    header_line = 0
    edges: list[tuple[int, int]] = []
    semis: list = []
    degree: Counter = Counter()
    mult: Counter = Counter()
    half_lines: dict[int, int] = {}
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        word, args = toks[0], toks[1:]
        if n is None:
            if word != "vertices" or len(args) != 1:
                raise MpoleParseError(lineno, "first line must be 'vertices <n>'")
            n = _int(args[0], lineno)
            if n < 0:
                raise MpoleParseError(lineno, "vertex count must be nonnegative")
            header_line = lineno
            continue

        def vertex(tok: str) -> int:
            u = _int(tok, lineno)
            if not 0 <= u < n:
                raise MpoleParseError(lineno, f"vertex {u} out of range 0..{n - 1}")
            degree[u] += 1
            if degree[u] > 3:
                raise MpoleParseError(lineno, f"cubic condition: vertex {u} has degree > 3")
            return u

        if word == "edge" and len(args) == 2:
            u, v = _int(args[0], lineno), _int(args[1], lineno)
            if u == v:
                raise MpoleParseError(lineno, f"loop at vertex {u}")
            u, v = vertex(args[0]), vertex(args[1])
            key = (min(u, v), max(u, v))
            mult[key] += 1
            if mult[key] > 2:
                raise MpoleParseError(lineno, f"multiplicity: edge {key} appears more than twice")
            edges.append((u, v))
        elif word == "semi" and len(args) == 1:
            semis.append(Attached(vertex(args[0])))
        elif word == "free" and not args:
            k = len(semis)
            semis += [FreePaired(k + 1), FreePaired(k)]
        elif word == "half" and len(args) == 1:
            half_lines[len(semis)] = lineno
            semis.append(FreePaired(_int(args[0], lineno)))
        else:
            raise MpoleParseError(lineno, f"unrecognised line {raw.strip()!r}")
    if n is None:
        raise MpoleParseError(max(lineno, 1), "missing 'vertices <n>' line")
    for i, line in half_lines.items():
        p = semis[i].partner
        if not (0 <= p < len(semis) and p != i and isinstance(semis[p], FreePaired)
                and semis[p].partner == i):
            raise MpoleParseError(line, f"free pairing: semiedge {i} has no matching half {p}")
    for u in range(n):
        if degree[u] != 3:
            raise MpoleParseError(header_line, f"cubic condition: vertex {u} has degree {degree[u]}")
    mp = Multipole(n, tuple(edges), tuple(semis))
    problems = validate(mp)
    if problems:
        raise MpoleParseError(lineno, "; ".join(problems))
    return mp


def write_mpole(mp: Multipole) -> str:
    lines = [f"vertices {mp.vertex_count}"]
    lines += [f"edge {u} {v}" for u, v in mp.edges]
    i = 0
    while i < mp.m:
        s = mp.semiedges[i]
        if isinstance(s, Attached):
            lines.append(f"semi {s.vertex}")
        elif s.partner == i + 1:
            lines.append("free")
            i += 1
        else:
            lines.append(f"half {s.partner}")
        i += 1
    return "\n".join(lines) + "\n"
