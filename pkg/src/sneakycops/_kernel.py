"""Dense backward-induction kernel for the pursuit game win table.

State layout: cop placements are nondecreasing k-tuples over n vertices,
ranked by the combinatorial number system into 0..C(n+k-1,k)-1.  For each
placement index the kernel keeps one bitboard over robber vertices per side
to move.  A sweep first grows every cop-to-move bitboard by OR-ing, over all
joint cop moves, the capture mask and the robber-to-move bitboard of the
successor placement, then grows the robber-to-move bitboards: a robber
vertex is lost when every legal robber move lands in the (capture-adjusted)
cop-to-move win set.  Sweeps repeat until nothing changes; the sweep number
at which a state enters the win set is its rank, which equals the number of
cop moves needed to force the capture (rank 1 = capture available on the
very next cop move; robber-to-move states where every move lands on a cop
carry rank 0 in the variants where that loses).

Bitboards are int64, which caps the solver at 62 vertices.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from math import comb

import numpy as np
from numba import njit

MAX_VERTICES = 62


def multiset_rank(cops: tuple[int, ...]) -> int:
    """Rank of a nondecreasing tuple in the combinatorial number system."""
    return sum(comb(c + i, i + 1) for i, c in enumerate(cops))


def multiset_count(n: int, k: int) -> int:
    return comb(n + k - 1, k)


def all_multisets(n: int, k: int) -> list[tuple[int, ...]]:
    """All nondecreasing k-tuples over 0..n-1, indexed by multiset_rank."""
    out: list = [None] * multiset_count(n, k)
    for tup in combinations_with_replacement(range(n), k):
        out[multiset_rank(tup)] = tup
    return out


def binomial_table(rows: int, cols: int) -> np.ndarray:
    t = np.zeros((rows, cols), dtype=np.int64)
    for a in range(rows):
        for b in range(cols):
            t[a, b] = comb(a, b)
    return t


@njit(cache=True)
def _fixpoint(pos, occ, mv_flat, mv_off, move_mask, full_mask,
              robber_capture, binom, rank_c, rank_r):
    """Iterate sweeps until the win bitboards stop changing.

    pos:        (M, k) sorted cop positions per placement index
    occ:        (M,) occupied-vertex bitboard per placement
    mv_flat/mv_off: CSR legal-move lists per vertex (variant-adjusted)
    move_mask:  (n,) legal-move bitboard per vertex
    robber_capture: True when moving onto a cop loses for the robber
    rank_c/rank_r: (M, n) int32, prefilled -1, written with entry sweeps
    Returns the number of sweeps run (last one is the no-change check).
    """
    M, k = pos.shape
    n = move_mask.shape[0]
    w_c = np.zeros(M, np.int64)
    w_r = np.zeros(M, np.int64)
    choice = np.zeros(k, np.int64)
    base = np.zeros(k, np.int64)
    cnt = np.zeros(k, np.int64)
    tgt = np.zeros(k, np.int64)
    if robber_capture:
        # Sweep 0: a robber whose every move lands on a cop self-captures
        # with no cop move spent, so those states carry rank 0.
        for m in range(M):
            wr = w_r[m]
            for r in range(n):
                if (move_mask[r] & ~occ[m]) == 0:
                    wr |= 1 << r
                    rank_r[m, r] = 0
            w_r[m] = wr
    sweep = 0
    changed = True
    while changed:
        changed = False
        sweep += 1
        for m in range(M):
            cur = w_c[m]
            if cur == full_mask:
                continue
            acc = cur
            for j in range(k):
                v = pos[m, j]
                base[j] = mv_off[v]
                cnt[j] = mv_off[v + 1] - mv_off[v]
                choice[j] = 0
            while True:
                for j in range(k):
                    tgt[j] = mv_flat[base[j] + choice[j]]
                for a in range(1, k):
                    key = tgt[a]
                    b = a - 1
                    while b >= 0 and tgt[b] > key:
                        tgt[b + 1] = tgt[b]
                        b -= 1
                    tgt[b + 1] = key
                idx = 0
                for j in range(k):
                    idx += binom[tgt[j] + j, j + 1]
                acc |= occ[idx] | w_r[idx]
                if acc == full_mask:
                    break
                j = k - 1
                while j >= 0:
                    choice[j] += 1
                    if choice[j] < cnt[j]:
                        break
                    choice[j] = 0
                    j -= 1
                if j < 0:
                    break
            new = acc & ~cur
            if new != 0:
                w_c[m] = acc
                changed = True
                for r in range(n):
                    if (new >> r) & 1:
                        rank_c[m, r] = sweep
        for m in range(M):
            blocked = w_c[m]
            if robber_capture:
                blocked |= occ[m]
            wr = w_r[m]
            for r in range(n):
                if (wr >> r) & 1:
                    continue
                if (move_mask[r] & ~blocked) == 0:
                    wr |= 1 << r
                    rank_r[m, r] = sweep
                    changed = True
            w_r[m] = wr
    return sweep


def run_fixpoint(n: int, k: int, move_lists: list[list[int]],
                 robber_capture: bool) -> tuple[np.ndarray, np.ndarray, int]:
    """Build the dense arrays and run the sweep kernel.

    move_lists[v] is the (variant-adjusted) sorted list of legal moves from
    v, shared by cops and robber.  Returns (rank_c, rank_r, sweeps) where a
    nonnegative entry is the rank of a cop-win state and -1 marks states the
    robber survives from.
    """
    multisets = all_multisets(n, k)
    M = len(multisets)
    pos = np.array(multisets, dtype=np.int32).reshape(M, k)
    occ = np.zeros(M, dtype=np.int64)
    for m, tup in enumerate(multisets):
        mask = 0
        for c in tup:
            mask |= 1 << c
        occ[m] = mask
    mv_off = np.zeros(n + 1, dtype=np.int32)
    for v in range(n):
        mv_off[v + 1] = mv_off[v] + len(move_lists[v])
    mv_flat = np.zeros(mv_off[-1], dtype=np.int32)
    move_mask = np.zeros(n, dtype=np.int64)
    for v in range(n):
        mv_flat[mv_off[v]:mv_off[v + 1]] = sorted(move_lists[v])
        mask = 0
        for w in move_lists[v]:
            mask |= 1 << w
        move_mask[v] = mask
    full_mask = (1 << n) - 1
    binom = binomial_table(n + k + 1, k + 2)
    rank_c = np.full((M, n), -1, dtype=np.int32)
    rank_r = np.full((M, n), -1, dtype=np.int32)
    sweeps = _fixpoint(pos, occ, mv_flat, mv_off, move_mask, full_mask,
                       robber_capture, binom, rank_c, rank_r)
    return rank_c, rank_r, sweeps
