"""Independent oracles used to cross-check the fast implementations.

The game oracle is a memoized depth-bounded minimax over raw state tuples:
the depth budget counts cop moves, and the pigeonhole bound (one more than
the number of robber-to-move states) makes the cutoff equivalent to
declaring a repeated robber-to-move position with no progress a robber win.
It shares no code with the bitboard sweep kernel.
"""

from __future__ import annotations

import sys
from functools import lru_cache
from itertools import combinations_with_replacement, product

from sneakycops import Graph, Variant


def oracle_solve(g: Graph, k: int, variant: Variant):
    """Return (cop_rank, robber_rank) dicts keyed by (cops, robber).

    Values are the minimum cop-move budget that forces capture (the rank),
    or None when the robber survives forever.
    """
    sys.setrecursionlimit(200000)
    n = g.n
    must_move = variant is not Variant.CLASSIC
    robber_capture = variant is not Variant.SNEAKY_ACTIVE

    def moves(v):
        nbrs = set(g.adjacency[v])
        if not must_move:
            nbrs.add(v)
        return tuple(sorted(nbrs))

    move_of = [moves(v) for v in range(n)]
    multisets = list(combinations_with_replacement(range(n), k))
    bound = len(multisets) * n + 3

    def joint(cops):
        outs = set()
        for combo in product(*(move_of[c] for c in cops)):
            outs.add(tuple(sorted(combo)))
        return sorted(outs)

    joint_of = {c: joint(c) for c in multisets}

    @lru_cache(maxsize=None)
    def cop_can_win(cops, r, cop_to_move, budget):
        if cop_to_move:
            if budget == 0:
                return False
            for target in joint_of[cops]:
                if r in target:
                    return True
                if cop_can_win(target, r, False, budget - 1):
                    return True
            return False
        for rm in move_of[r]:
            if robber_capture and rm in cops:
                continue  # suicidal move, counts for the cops
            if not cop_can_win(cops, rm, True, budget):
                return False
        return True

    def rank(cops, r, cop_to_move):
        if not cop_can_win(cops, r, cop_to_move, bound):
            return None
        lo = 0
        while not cop_can_win(cops, r, cop_to_move, lo):
            lo += 1
        return lo

    cop_rank = {}
    robber_rank = {}
    for cops in multisets:
        for r in range(n):
            cop_rank[(cops, r)] = rank(cops, r, True)
            robber_rank[(cops, r)] = rank(cops, r, False)
    return cop_rank, robber_rank


def oracle_cop_number(g: Graph, variant: Variant, cap: int | None = None) -> int:
    """Smallest k whose win table has an all-starts-winning placement."""
    cap = g.n if cap is None else cap
    for k in range(1, cap + 1):
        cop_rank, _ = oracle_solve(g, k, variant)
        multisets = set(c for c, _ in cop_rank)
        for cops in multisets:
            if all(cop_rank[(cops, r)] is not None for r in range(g.n)):
                return k
    raise AssertionError(f"no winning k <= {cap}")


def has_odd_closed_walk(g: Graph) -> bool:
    """Brute force via boolean adjacency powers (loops are length-1 walks)."""
    n = g.n
    adj = [[w in g.adjacency[v] for w in range(n)] for v in range(n)]
    power = adj
    for length in range(1, 2 * n + 2):
        if length % 2 == 1 and any(power[v][v] for v in range(n)):
            return True
        power = [
            [any(power[v][u] and adj[u][w] for u in range(n)) for w in range(n)]
            for v in range(n)
        ]
    return False


def is_homomorphism(g: Graph, h: Graph, mapping) -> bool:
    """Does vertex map g->h send every edge (and loop) to an edge?"""
    for u in range(g.n):
        for v in g.adjacency[u]:
            if mapping[v] not in h.adjacency[mapping[u]]:
                return False
    return True


def subsets_brute(n: int, m: int):
    from itertools import combinations

    return [frozenset(c) for c in combinations(range(1, n + 1), m)]
