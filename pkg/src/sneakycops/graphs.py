"""Finite undirected graphs with loops: the universe for every other module.

Vertices are dense integers 0..n-1.  Loops are allowed, multi-edges and
isolated vertices are not.  Neighborhoods are loop-inclusive throughout the
package: v is its own neighbor exactly when it carries a loop.  That single
convention drives fold checks, move generation and degree counts alike.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import (
    IsolatedVertexError,
    OutOfRangeError,
    ParseError,
    SizeLimitExceededError,
)


class Graph:
    """Immutable undirected graph with optional loops and no isolated vertices."""

    __slots__ = ("n", "adjacency", "_hash")

    def __init__(self, n: int, adjacency: Sequence[frozenset[int]]):
        # Internal constructor: callers go through build() for validation.
        self.n = n
        self.adjacency = tuple(adjacency)
        self._hash = hash((n, self.adjacency))

    def neighbors(self, v: int) -> frozenset[int]:
        """Loop-inclusive open neighborhood: v in neighbors(v) iff v is looped."""
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        """Loop-inclusive degree |N(v)| (a loop counts once)."""
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def has_loop(self, v: int) -> bool:
        return v in self.adjacency[v]

    def loops(self) -> frozenset[int]:
        return frozenset(v for v in range(self.n) if v in self.adjacency[v])

    def is_reflexive(self) -> bool:
        return all(v in self.adjacency[v] for v in range(self.n))

    def has_any_loop(self) -> bool:
        return any(v in self.adjacency[v] for v in range(self.n))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as pairs (u, v) with u <= v, lexicographically sorted."""
        for u in range(self.n):
            for v in sorted(self.adjacency[u]):
                if u <= v:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(1 for _ in self.edges())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adjacency == other.adjacency
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges())})"


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build and validate a graph from an edge list.

    Raises OutOfRangeError on a bad endpoint and IsolatedVertexError if any
    vertex ends up with an empty neighborhood.  Duplicate edges collapse.
    """
    if n < 1:
        raise OutOfRangeError(n, n)
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        for w in (u, v):
            if not (0 <= w < n):
                raise OutOfRangeError(w, n)
        adj[u].add(v)
        adj[v].add(u)
    for v in range(n):
        if not adj[v]:
            raise IsolatedVertexError(v)
    return Graph(n, [frozenset(s) for s in adj])


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on `vertices` (relabeled 0..len-1 in the given order).

    Returns the subgraph together with the new->old vertex map.  Raises
    IsolatedVertexError if some kept vertex loses all its neighbors.
    """
    keep = list(vertices)
    index = {old: new for new, old in enumerate(keep)}
    edges = []
    for new, old in enumerate(keep):
        for w in g.adjacency[old]:
            if w in index:
                edges.append((new, index[w]))
    sub = build(len(keep), edges)
    return sub, tuple(keep)


# ---------------------------------------------------------------------------
# Bipartition and connectivity
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Bipartition:
    """2-coloring result: valid iff no odd closed walk (loops count as odd).

    When valid, parts[v] is 0 or 1 with the lowest vertex of every connected
    component on side 0, which pins the labeling up to the component swap.
    """

    valid: bool
    parts: Optional[tuple[int, ...]]

    def side(self, s: int) -> tuple[int, ...]:
        assert self.valid and self.parts is not None
        return tuple(v for v, p in enumerate(self.parts) if p == s)


def bipartition(g: Graph) -> Bipartition:
    """2-color each component by BFS; any loop or odd cycle invalidates."""
    color: list[int] = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in g.adjacency[v]:
                if w == v:
                    return Bipartition(False, None)
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return Bipartition(False, None)
    return Bipartition(True, tuple(color))


@dataclass(frozen=True)
class Component:
    """One connected piece: its vertex set, the induced graph, and the
    new->old relabeling back into the parent graph."""

    vertices: tuple[int, ...]
    graph: Graph
    to_parent: tuple[int, ...]

    def parent_vertex(self, v: int) -> int:
        return self.to_parent[v]


def components(g: Graph) -> list[Component]:
    """Connected components in order of their smallest vertex."""
    seen = [False] * g.n
    out: list[Component] = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        block = []
        while stack:
            v = stack.pop()
            block.append(v)
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        block.sort()
        sub, to_parent = induced_subgraph(g, block)
        out.append(Component(tuple(block), sub, to_parent))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


# ---------------------------------------------------------------------------
# Isomorphism (exhaustive backtracking with color refinement)
# ---------------------------------------------------------------------------

ISO_DEFAULT_CAP = 64


def _refine_colors(g: Graph) -> list[int]:
    """Iterated neighborhood-color refinement (loop flag + degree seed)."""
    color = [(g.has_loop(v), g.degree(v)) for v in range(g.n)]
    while True:
        sig = [
            (color[v], tuple(sorted(color[w] for w in g.adjacency[v])))
            for v in range(g.n)
        ]
        palette = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [palette[s] for s in sig]
        old_classes = len(set(color))
        color = [(0, c) for c in new]
        if len(set(new)) == old_classes:
            return new


def isomorphic(g: Graph, h: Graph, size_cap: int = ISO_DEFAULT_CAP) -> Optional[tuple[int, ...]]:
    """Vertex bijection g->h preserving adjacency and loops, or None.

    Deterministic: candidates are tried in increasing vertex order, so the
    returned mapping is the lexicographically least one the search visits.
    """
    if g.n > size_cap or h.n > size_cap:
        raise SizeLimitExceededError(
            f"isomorphism search capped at {size_cap} vertices"
        )
    if g.n != h.n:
        return None
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return None
    if g.edge_count() != h.edge_count():
        return None
    cg, ch = _refine_colors(g), _refine_colors(h)
    if sorted(cg) != sorted(ch):
        return None

    # Map vertices of g in order of ascending color-class rarity, then id.
    class_size = {c: cg.count(c) for c in set(cg)}
    order = sorted(range(g.n), key=lambda v: (class_size[cg[v]], v))
    mapping: list[int] = [-1] * g.n
    used = [False] * h.n

    def extend(i: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        for w in range(h.n):
            if used[w] or ch[w] != cg[v]:
                continue
            ok = g.has_loop(v) == h.has_loop(w)
            if ok:
                for u in range(g.n):
                    if mapping[u] != -1 and u != v:
                        if g.has_edge(v, u) != h.has_edge(w, mapping[u]):
                            ok = False
                            break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    if extend(0):
        return tuple(mapping)
    return None


# ---------------------------------------------------------------------------
# Text and JSON I/O
# ---------------------------------------------------------------------------


def dumps(g: Graph) -> str:
    """Canonical text form: `n=<int>` header then one `u v` line per edge,
    sorted lexicographically with u <= v.  Loops appear as `v v`."""
    lines = [f"n={g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def dumps_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [[u, v] for u, v in g.edges()]})


def loads(text: str) -> Graph:
    """Parse the text format (or the JSON form if the payload starts with '{')."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(text)
            return build(int(obj["n"]), [(int(u), int(v)) for u, v in obj["edges"]])
        except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad JSON graph: {exc}", 1) from exc
    n: Optional[int] = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            if not line.startswith("n="):
                raise ParseError("expected header 'n=<int>'", lineno)
            try:
                n = int(line[2:])
            except ValueError as exc:
                raise ParseError(f"bad vertex count {line[2:]!r}", lineno) from exc
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError as exc:
            raise ParseError(f"non-integer endpoint in {line!r}", lineno) from exc
        edges.append((u, v))
    if n is None:
        raise ParseError("missing header 'n=<int>'", 1)
    return build(n, edges)


def fingerprint(g: Graph) -> str:
    """Short stable identifier of the canonical serialization."""
    return hashlib.sha256(dumps(g).encode()).hexdigest()[:16]
