"""Generators for the graph families the solver is exercised on.

Labelings are documented so every example is reproducible bit-exactly:
cycles and paths use 0..n-1 in order, Kneser vertices are the m-subsets of
{1..n} in lexicographic order, hypercubes are iterated box products of K2.
"""

from __future__ import annotations

import heapq
import random
import re
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from .errors import InvalidSpecError
from .graphs import Graph, build

FAMILIES = (
    "path",            # Pn: n vertices 0..n-1
    "looped_path",     # I_n^l: n+1 vertices, all looped
    "cycle",           # Cn
    "looped_cycle",    # Cn^l
    "complete",        # Kn
    "looped_complete", # Kn^l
    "kneser",          # K(n, m)
    "terminal",        # T: one looped vertex
    "hypercube",       # Qd
    "random_tree",     # uniform labeled tree from a seed
)


@dataclass(frozen=True)
class FamilySpec:
    """A named family plus its parameters (checked in generate)."""

    family: str
    params: tuple[int, ...] = ()
    seed: Optional[int] = field(default=None)

    def label(self) -> str:
        p = ",".join(str(x) for x in self.params)
        if self.seed is not None:
            return f"{self.family}({p};seed={self.seed})"
        return f"{self.family}({p})"


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidSpecError(msg)


def path(n: int) -> Graph:
    _need(n >= 2, "path needs at least 2 vertices")
    return build(n, [(i, i + 1) for i in range(n - 1)])


def looped_path(n: int) -> Graph:
    """Looped path on n+1 vertices 0..n (every vertex carries a loop)."""
    _need(n >= 0, "looped path index must be >= 0")
    loops = [(i, i) for i in range(n + 1)]
    return build(n + 1, loops + [(i, i + 1) for i in range(n)])


def cycle(n: int) -> Graph:
    _need(n >= 3, "cycle needs at least 3 vertices")
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def looped_cycle(n: int) -> Graph:
    _need(n >= 3, "looped cycle needs at least 3 vertices")
    return build(n, [(i, (i + 1) % n) for i in range(n)] + [(i, i) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n >= 2, "complete graph needs at least 2 vertices")
    return build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def looped_complete(n: int) -> Graph:
    _need(n >= 1, "looped complete graph needs at least 1 vertex")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)]
    return build(n, edges + [(i, i) for i in range(n)])


def kneser(n: int, m: int) -> Graph:
    """Kneser graph K(n, m): m-subsets of {1..n}, adjacent when disjoint.

    Vertices are numbered by the lexicographic order of the subsets, so
    K(5, 2) is the Petersen graph with vertex 0 = {1,2}.
    """
    _need(m >= 1, "kneser subset size must be >= 1")
    _need(n >= 2 * m, "kneser needs n >= 2m for a nonempty edge set")
    subsets = [frozenset(c) for c in combinations(range(1, n + 1), m)]
    edges = [
        (i, j)
        for i in range(len(subsets))
        for j in range(i + 1, len(subsets))
        if not (subsets[i] & subsets[j])
    ]
    return build(len(subsets), edges)


def terminal() -> Graph:
    """One vertex with one loop."""
    return build(1, [(0, 0)])


def hypercube(d: int) -> Graph:
    """Qd as the d-fold box product of K2 (coordinates little-endian)."""
    _need(d >= 1, "hypercube dimension must be >= 1")
    from .products import iterated_box

    g, _ = iterated_box([complete(2)] * d)
    return g


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labeled tree on n vertices via a random Pruefer sequence."""
    _need(n >= 2, "tree needs at least 2 vertices")
    if n == 2:
        return build(2, [(0, 1)])
    rng = random.Random(seed)
    pruefer = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in pruefer:
        degree[v] += 1
    edges = []
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    heapq.heapify(leaves)
    for v in pruefer:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return build(n, edges)


def generate(spec: FamilySpec) -> Graph:
    """Build the family named by `spec`, validating its parameters."""
    fam, p = spec.family, spec.params
    if fam not in FAMILIES:
        raise InvalidSpecError(f"unknown family {fam!r}")
    if fam == "terminal":
        _need(len(p) == 0, "terminal takes no parameters")
        return terminal()
    if fam == "kneser":
        _need(len(p) == 2, "kneser takes (n, m)")
        return kneser(p[0], p[1])
    if fam == "random_tree":
        _need(len(p) == 1, "random_tree takes (n,)")
        _need(spec.seed is not None, "random_tree needs a seed")
        return random_tree(p[0], spec.seed)
    _need(len(p) == 1, f"{fam} takes a single parameter")
    return {
        "path": path,
        "looped_path": looped_path,
        "cycle": cycle,
        "looped_cycle": looped_cycle,
        "complete": complete,
        "looped_complete": looped_complete,
        "hypercube": hypercube,
    }[fam](p[0])


# Shorthand grammar used by the CLI wherever a graph file is accepted:
#   T, Cn, Cnl, Pn, Kn, Knl, Kn_m (Kneser), Qd, Inl (looped path).
_SHORTHAND = re.compile(r"^(?:(T)|([CPKQI])(\d+)(l)?(?:_(\d+))?)$")


def from_shorthand(token: str) -> Optional[Graph]:
    """Decode a family shorthand like C5, P4, K6, K5_2, Q3, T, I4l.

    Returns None when the token is not shorthand at all; raises
    InvalidSpecError when it is shorthand with bad parameters.
    """
    m = _SHORTHAND.match(token)
    if not m:
        return None
    if m.group(1):
        return terminal()
    kind, num, looped, second = m.group(2), int(m.group(3)), m.group(4), m.group(5)
    if kind == "K" and second is not None:
        _need(not looped, "kneser shorthand takes no loop suffix")
        return kneser(num, int(second))
    _need(second is None, f"only K<n>_<m> takes a second parameter, not {token!r}")
    if kind == "C":
        return looped_cycle(num) if looped else cycle(num)
    if kind == "P":
        _need(not looped, "use I<n>l for looped paths")
        return path(num)
    if kind == "K":
        return looped_complete(num) if looped else complete(num)
    if kind == "Q":
        _need(not looped, "hypercube shorthand takes no loop suffix")
        return hypercube(num)
    _need(looped == "l", "looped path shorthand is I<n>l")
    return looped_path(num)
