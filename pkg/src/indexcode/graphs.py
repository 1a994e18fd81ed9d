"""Directed side-information graphs and deterministic cycle machinery.

Vertices are labeled 1..n. Deletion never relabels: a graph carries the set
of surviving ("live") vertices so that results stay comparable across
deletions. No self-loops, no parallel arcs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

DEFAULT_CYCLE_CAP = 100_000

__all__ = [
    "DEFAULT_CYCLE_CAP",
    "CycleList",
    "Digraph",
    "GuardError",
    "ParseError",
    "canonical_rotation",
    "cycle_arcs",
    "enumerate_cycles",
    "parse_digraph",
    "path_arcs",
    "serialize_digraph",
    "strongly_connected_components",
    "union_of_cycles",
]


class ParseError(ValueError):
    """A graph file violates the text format; carries the offending line."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class GuardError(RuntimeError):
    """An exhaustive routine refused to run past its size guard."""


@dataclass(frozen=True)
class Digraph:
    """A finite digraph on labels 1..n with a live-vertex mask."""

    n: int
    arcs: frozenset[tuple[int, int]]
    live: frozenset[int]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if not self.live <= frozenset(range(1, self.n + 1)):
            raise ValueError("live vertices out of range 1..n")
        for u, v in self.arcs:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in self.live or v not in self.live:
                raise ValueError(f"arc ({u},{v}) touches a dead or unknown vertex")

    @classmethod
    def from_arcs(cls, n: int, arcs) -> "Digraph":
        """Build a graph with all of 1..n live."""
        return cls(n, frozenset((int(u), int(v)) for u, v in arcs),
                   frozenset(range(1, n + 1)))

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(sorted(self.live))

    @property
    def num_vertices(self) -> int:
        return len(self.live)

    @property
    def num_arcs(self) -> int:
        return len(self.arcs)

    @cached_property
    def _out(self) -> dict[int, tuple[int, ...]]:
        heads: dict[int, list[int]] = {v: [] for v in self.live}
        for u, v in self.arcs:
            heads[u].append(v)
        return {v: tuple(sorted(ws)) for v, ws in heads.items()}

    @cached_property
    def _in(self) -> dict[int, tuple[int, ...]]:
        tails: dict[int, list[int]] = {v: [] for v in self.live}
        for u, v in self.arcs:
            tails[v].append(u)
        return {v: tuple(sorted(ws)) for v, ws in tails.items()}

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        """Heads of arcs leaving v (ascending). These are the messages
        receiver v already knows."""
        try:
            return self._out[v]
        except KeyError:
            raise ValueError(f"vertex {v} is not live") from None

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        try:
            return self._in[v]
        except KeyError:
            raise ValueError(f"vertex {v} is not live") from None

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def delete_vertices(self, drop) -> "Digraph":
        """Mask out a set of live vertices together with incident arcs."""
        drop = frozenset(drop)
        if not drop <= self.live:
            raise ValueError("can only delete live vertices")
        keep = self.live - drop
        arcs = frozenset(a for a in self.arcs if a[0] in keep and a[1] in keep)
        return Digraph(self.n, arcs, keep)

    def induced(self, keep) -> "Digraph":
        """Subgraph induced on a subset of the live vertices."""
        keep = frozenset(keep)
        if not keep <= self.live:
            raise ValueError("induced set must be live")
        return self.delete_vertices(self.live - keep)

    def is_acyclic(self) -> bool:
        # Kahn peeling over the live set.
        indeg = {v: 0 for v in self.live}
        for _, v in self.arcs:
            indeg[v] += 1
        stack = [v for v, d in indeg.items() if d == 0]
        seen = 0
        while stack:
            v = stack.pop()
            seen += 1
            for w in self._out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    stack.append(w)
        return seen == len(self.live)

    def _nx(self) -> nx.DiGraph:
        h = nx.DiGraph()
        h.add_nodes_from(self.live)
        h.add_edges_from(self.arcs)
        return h


def canonical_rotation(cycle: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate a cycle's vertex sequence to start at its smallest vertex."""
    k = cycle.index(min(cycle))
    return tuple(cycle[k:]) + tuple(cycle[:k])


def cycle_arcs(cycle: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """Consecutive arcs of a cycle, including the closing arc."""
    return tuple((cycle[t], cycle[(t + 1) % len(cycle)]) for t in range(len(cycle)))


def path_arcs(path: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    return tuple((path[t], path[t + 1]) for t in range(len(path) - 1))


@dataclass(frozen=True)
class CycleList:
    """Elementary cycles in canonical order, with a truncation marker.

    `truncated=True` means only the sorted prefix of the first `cap` cycles
    produced by the enumerator is available; absence conclusions must not be
    drawn from a truncated list.
    """

    cycles: tuple[tuple[int, ...], ...]
    truncated: bool

    def __iter__(self):
        return iter(self.cycles)

    def __len__(self):
        return len(self.cycles)


def enumerate_cycles(g: Digraph, cap: int = DEFAULT_CYCLE_CAP) -> CycleList:
    """All elementary directed cycles of g, ascending length then
    lexicographic canonical rotation. Stops collecting after `cap` cycles."""
    if cap < 1:
        raise ValueError("cycle cap must be positive")
    raw = list(itertools.islice(nx.simple_cycles(g._nx()), cap + 1))
    truncated = len(raw) > cap
    if truncated:
        raw = raw[:cap]
    cycles = sorted((canonical_rotation(tuple(c)) for c in raw),
                    key=lambda c: (len(c), c))
    return CycleList(tuple(cycles), truncated)


def strongly_connected_components(g: Digraph) -> tuple[frozenset[int], ...]:
    """SCCs ordered by smallest member."""
    comps = [frozenset(c) for c in nx.strongly_connected_components(g._nx())]
    return tuple(sorted(comps, key=min))


def union_of_cycles(g: Digraph, cycles) -> Digraph:
    """Subgraph of g formed by the vertices and arcs of the given cycles."""
    verts: set[int] = set()
    arcs: set[tuple[int, int]] = set()
    for c in cycles:
        for a in cycle_arcs(tuple(c)):
            if a not in g.arcs:
                raise ValueError(f"cycle arc {a} not present in the graph")
            arcs.add(a)
        verts.update(c)
    return Digraph(g.n, frozenset(arcs), frozenset(verts))


def parse_digraph(text: str) -> Digraph:
    """Parse the plain text graph format.

    Format: optional '#' comment lines and blanks anywhere, then a header
    "n m", then exactly m arc lines "i j" with 1-based endpoints. Rejects
    out-of-range endpoints, self-loops and duplicate arcs, each with the
    offending line number.
    """
    data: list[tuple[int, str]] = []
    nlines = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        nlines = lineno
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        data.append((lineno, s))
    if not data:
        raise ParseError(max(nlines, 1), "missing 'n m' header")
    lineno, header = data[0]
    parts = header.split()
    if len(parts) != 2:
        raise ParseError(lineno, f"header must be 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(lineno, f"header must be two integers, got {header!r}") from None
    if n < 1:
        raise ParseError(lineno, "vertex count must be at least 1")
    if m < 0:
        raise ParseError(lineno, "arc count must be non-negative")
    body = data[1:]
    if len(body) < m:
        raise ParseError(max(nlines, 1), f"expected {m} arc lines, found {len(body)}")
    if len(body) > m:
        raise ParseError(body[m][0], f"unexpected extra arc line (header declared {m})")
    arcs: set[tuple[int, int]] = set()
    for lineno, s in body:
        parts = s.split()
        if len(parts) != 2:
            raise ParseError(lineno, f"arc line must be 'i j', got {s!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"arc endpoints must be integers, got {s!r}") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(lineno, f"arc ({u},{v}) out of range 1..{n}")
        if u == v:
            raise ParseError(lineno, f"self-loop at vertex {u}")
        if (u, v) in arcs:
            raise ParseError(lineno, f"duplicate arc ({u},{v})")
        arcs.add((u, v))
    return Digraph.from_arcs(n, arcs)


def serialize_digraph(g: Digraph) -> str:
    """Inverse of parse_digraph: header line plus arcs in ascending order.

    Only defined for graphs whose full label range is live (parsing always
    produces such graphs).
    """
    if g.live != frozenset(range(1, g.n + 1)):
        raise ValueError("cannot serialize a graph with masked-out vertices")
    lines = [f"{g.n} {g.num_arcs}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.arcs))
    return "\n".join(lines)
