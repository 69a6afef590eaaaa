"""Fold machinery: folding, unfolding, dismantling and equivalence testing.

A fold deletes a vertex x whose loop-inclusive neighborhood is contained in
another vertex's: N(x) subseteq N(x').  Two graphs are treated as
equivalent when both dismantle (exhaustive folding) to isomorphic stiff
cores; every equivalence comes with a replayable certificate.  Core
uniqueness is an operating assumption checked empirically by the test
suite, not proved here.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidUnfoldError, NotFoldableError
from .graphs import Graph, build, fingerprint, isomorphic


@dataclass(frozen=True)
class FoldStep:
    """One elementary move.

    kind "fold": vertex x (labels of the graph the step applies to) is
    deleted, absorbed by xp; vertices above x shift down by one.
    kind "unfold": a new vertex (the next free label) is added with
    neighborhood `added_neighbors`, and folds back onto xp.
    """

    kind: str  # "fold" | "unfold"
    x: int
    xp: int
    added_neighbors: Optional[tuple[int, ...]] = None

    def to_jsonable(self) -> dict:
        out: dict = {"kind": self.kind, "x": self.x, "xp": self.xp}
        if self.kind == "unfold":
            out["neighbors"] = list(self.added_neighbors or ())
        return out


@dataclass(frozen=True)
class FoldSequence:
    steps: tuple[FoldStep, ...]
    source_fingerprint: str
    target_fingerprint: str

    def to_json(self) -> str:
        return json.dumps({"steps": [s.to_jsonable() for s in self.steps]})

    def replay(self, g: Graph) -> Graph:
        """Apply the recorded steps to g; fails loudly on a mismatch."""
        if fingerprint(g) != self.source_fingerprint:
            raise ValueError("replay source does not match the recorded fingerprint")
        for step in self.steps:
            if step.kind == "fold":
                g, _ = fold(g, step.x, step.xp)
            else:
                g = unfold(g, step.xp, frozenset(step.added_neighbors or ()))
        if fingerprint(g) != self.target_fingerprint:
            raise ValueError("replay target does not match the recorded fingerprint")
        return g


def foldable_pairs(g: Graph) -> list[tuple[int, int]]:
    """All ordered pairs (x, xp), x != xp, with N(x) subseteq N(xp)."""
    out = []
    for x in range(g.n):
        nx = g.adjacency[x]
        for xp in range(g.n):
            if x != xp and nx <= g.adjacency[xp]:
                out.append((x, xp))
    return out


def fold(g: Graph, x: int, xp: int) -> tuple[Graph, tuple[int, ...]]:
    """Delete x, absorbed by xp.  Returns the folded graph and the fold map
    old->new (x maps to the new label of xp, everything else keeps its
    identity up to the shift-down renumbering)."""
    if not (0 <= x < g.n and 0 <= xp < g.n) or x == xp:
        raise NotFoldableError(f"bad fold pair ({x}, {xp})")
    if not g.adjacency[x] <= g.adjacency[xp]:
        raise NotFoldableError(f"N({x}) is not contained in N({xp})")
    relabel = []
    new = 0
    for v in range(g.n):
        if v == x:
            relabel.append(-1)
        else:
            relabel.append(new)
            new += 1
    relabel[x] = relabel[xp]
    edges = [
        (relabel[u], relabel[v])
        for u in range(g.n)
        if u != x
        for v in g.adjacency[u]
        if v != x
    ]
    return build(g.n - 1, edges), tuple(relabel)


def unfold(g: Graph, xp: int, nbrs: frozenset[int]) -> Graph:
    """Add a vertex (label g.n) with neighborhood `nbrs`; it must fold back
    onto xp, which is re-checked on the result (one source of truth for the
    fold condition).  Including g.n itself in nbrs asks for a loop on the
    new vertex."""
    if not nbrs:
        raise InvalidUnfoldError("unfold needs a nonempty neighborhood")
    new = g.n
    if not all(0 <= w <= new for w in nbrs):
        raise InvalidUnfoldError(f"neighbor out of range in {sorted(nbrs)}")
    edges = list(g.edges()) + [(new, w) for w in nbrs]
    try:
        h = build(g.n + 1, edges)
    except Exception as exc:
        raise InvalidUnfoldError(str(exc)) from exc
    if not h.adjacency[new] <= h.adjacency[xp]:
        raise InvalidUnfoldError(
            f"new vertex with neighborhood {sorted(nbrs)} does not fold onto {xp}"
        )
    return h


def dismantle(g: Graph) -> tuple[Graph, FoldSequence]:
    """Fold until stiff.  Deterministic: always the lowest-numbered foldable
    x onto the lowest-numbered valid xp."""
    src = fingerprint(g)
    steps = []
    while True:
        pairs = foldable_pairs(g)
        if not pairs:
            break
        x, xp = min(pairs)
        steps.append(FoldStep("fold", x, xp))
        g, _ = fold(g, x, xp)
    return g, FoldSequence(tuple(steps), src, fingerprint(g))


def is_stiff(g: Graph) -> bool:
    return not foldable_pairs(g)


@dataclass(frozen=True)
class EquivalenceCertificate:
    """Dismantle both graphs and match the stiff cores: replaying the two
    sequences and applying the core isomorphism exhibits the equivalence."""

    left: FoldSequence
    right: FoldSequence
    core_isomorphism: tuple[int, ...]


def homotopy_equivalent(g: Graph, h: Graph,
                        size_cap: int = 64) -> Optional[EquivalenceCertificate]:
    """Certificate that g and h share a stiff core, or None."""
    core_g, seq_g = dismantle(g)
    core_h, seq_h = dismantle(h)
    iso = isomorphic(core_g, core_h, size_cap=size_cap)
    if iso is None:
        return None
    return EquivalenceCertificate(seq_g, seq_h, iso)


def random_perturbation(g: Graph, steps: int, seed) -> Graph:
    """Apply `steps` random folds/unfolds; the result is equivalent to g by
    construction.  Deterministic for a fixed seed."""
    rng = random.Random(seed)
    for _ in range(steps):
        pairs = foldable_pairs(g)
        # Bias towards growth so perturbed graphs do not collapse straight
        # back to the core; fold only when something is foldable.
        if pairs and rng.random() < 0.4:
            x, xp = rng.choice(pairs)
            g, _ = fold(g, x, xp)
            continue
        xp = rng.randrange(g.n)
        candidates = sorted(g.adjacency[xp])
        size = rng.randint(1, len(candidates))
        nbrs = set(rng.sample(candidates, size))
        if xp in nbrs and g.has_loop(xp) and rng.random() < 0.5:
            nbrs.add(g.n)  # give the new twin a loop too
        g = unfold(g, xp, frozenset(nbrs))
    return g
