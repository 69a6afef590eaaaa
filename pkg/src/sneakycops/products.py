"""Categorical (x), box and strong graph products.

Product vertices are numbered (v, w) -> v * |V(y)| + w.  Loop conventions:

* categorical: (v, w) is looped iff both v and w are looped (the edge rule
  applied verbatim);
* box: (v, w) is looped iff v or w is looped, since moving one coordinate
  along a loop returns to the same product vertex;
* strong: the edge-set union of the two.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .graphs import Graph, build


@dataclass(frozen=True)
class ProductVertexMap:
    """Bijection between product vertex ids and coordinate tuples."""

    pairs: tuple[tuple[int, ...], ...]

    def coords(self, vertex: int) -> tuple[int, ...]:
        return self.pairs[vertex]

    def index(self, coords: Sequence[int]) -> int:
        return self.pairs.index(tuple(coords))

    def to_json(self) -> str:
        return json.dumps([list(p) for p in self.pairs])


def _pair_map(x: Graph, y: Graph) -> ProductVertexMap:
    return ProductVertexMap(
        tuple((v, w) for v in range(x.n) for w in range(y.n))
    )


def categorical_product(x: Graph, y: Graph) -> tuple[Graph, ProductVertexMap]:
    """(v1,w1) ~ (v2,w2) iff v1 ~ v2 and w1 ~ w2.

    For inputs satisfying the no-isolated-vertex invariant the product has
    no isolated vertex either, but build() re-validates regardless.
    """
    ny = y.n
    edges = []
    for v1 in range(x.n):
        for v2 in x.adjacency[v1]:
            for w1 in range(y.n):
                for w2 in y.adjacency[w1]:
                    a, b = v1 * ny + w1, v2 * ny + w2
                    if a <= b:
                        edges.append((a, b))
    return build(x.n * y.n, edges), _pair_map(x, y)


def box_product(x: Graph, y: Graph) -> tuple[Graph, ProductVertexMap]:
    """(v1,w1) ~ (v2,w2) iff one coordinate is equal and the other adjacent."""
    ny = y.n
    edges = []
    for v in range(x.n):
        for w1 in range(y.n):
            a = v * ny + w1
            for w2 in y.adjacency[w1]:
                b = v * ny + w2
                if a <= b:
                    edges.append((a, b))
    for w in range(y.n):
        for v1 in range(x.n):
            a = v1 * ny + w
            for v2 in x.adjacency[v1]:
                b = v2 * ny + w
                if a <= b:
                    edges.append((a, b))
    return build(x.n * y.n, edges), _pair_map(x, y)


def strong_product(x: Graph, y: Graph) -> tuple[Graph, ProductVertexMap]:
    """Edge union of the categorical and box products on the same vertices."""
    cat, _ = categorical_product(x, y)
    box, vmap = box_product(x, y)
    edges = list(cat.edges()) + list(box.edges())
    return build(x.n * y.n, edges), vmap


def iterated_box(gs: Sequence[Graph]) -> tuple[Graph, ProductVertexMap]:
    """Left fold of box_product with a flattened coordinate map."""
    if not gs:
        raise ValueError("iterated_box needs at least one factor")
    acc = gs[0]
    coords: list[tuple[int, ...]] = [(v,) for v in range(acc.n)]
    for g in gs[1:]:
        acc, _ = box_product(acc, g)
        coords = [base + (w,) for base in coords for w in range(g.n)]
    return acc, ProductVertexMap(tuple(coords))
