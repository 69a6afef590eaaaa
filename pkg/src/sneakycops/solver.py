"""Exact solving of the pursuit game in its three variants.

The game: cops place first, then the robber places; the cop player moves all
cops jointly, then the robber moves, and so on.  Variants differ in two
rules only:

* movement: in the classic variant a piece may stay or move to a neighbor;
  in the fully-active and sneaky-active variants every piece must move to a
  loop-inclusive neighbor (a loop is the only way to stay);
* capture: classic and fully-active count any cop/robber co-location after
  either side's move; sneaky-active counts only a cop moving onto the
  robber, so the robber may step onto a cop and "sneak" by.

Placement itself is never a capture in any variant.

solve_win_table computes the least fixpoint of cop-winnable states by
backward induction over the full state space (sorted cop multisets x robber
vertex x side to move).  The rank of a cop-win state is the exact number of
cop moves needed to force capture: a rank-r cop-to-move state is captured
within r cop turns under the extracted strategy, whatever the robber does.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from enum import Enum
from itertools import product as iproduct
from typing import Callable, Iterator, Optional

import numpy as np

from ._kernel import (
    MAX_VERTICES,
    all_multisets,
    multiset_count,
    multiset_rank,
    run_fixpoint,
)
from .errors import BudgetExceededError, CapExceededError, NotWinningError, SolverError
from .graphs import Bipartition, Graph, bipartition, components, fingerprint

DEFAULT_BUDGET = 2 * 10**8


class Variant(str, Enum):
    CLASSIC = "classic"
    FULLY_ACTIVE = "fully-active"
    SNEAKY_ACTIVE = "sneaky-active"

    @property
    def must_move(self) -> bool:
        return self is not Variant.CLASSIC

    @property
    def capture_on_robber_move(self) -> bool:
        """Whether the robber moving onto a cop loses immediately."""
        return self is not Variant.SNEAKY_ACTIVE

    @classmethod
    def parse(cls, token: str) -> "Variant":
        aliases = {
            "classic": cls.CLASSIC,
            "active": cls.FULLY_ACTIVE,
            "fully-active": cls.FULLY_ACTIVE,
            "sneaky": cls.SNEAKY_ACTIVE,
            "sneaky-active": cls.SNEAKY_ACTIVE,
        }
        try:
            return aliases[token]
        except KeyError:
            raise ValueError(f"unknown variant {token!r}") from None


@dataclass(frozen=True)
class GameState:
    cops: tuple[int, ...]
    robber: int
    cop_to_move: bool = True

    def __post_init__(self):
        object.__setattr__(self, "cops", tuple(sorted(self.cops)))


def legal_moves(g: Graph, v: int, variant: Variant) -> frozenset[int]:
    """Moves of a single piece standing on v.  Never empty."""
    if variant.must_move:
        return g.neighbors(v)
    return g.neighbors(v) | {v}


def joint_cop_moves(g: Graph, cops: tuple[int, ...], variant: Variant) -> Iterator[tuple[int, ...]]:
    """Distinct sorted target multisets of a joint cop move, in sorted order."""
    lists = [sorted(legal_moves(g, c, variant)) for c in cops]
    seen = set()
    for combo in iproduct(*lists):
        t = tuple(sorted(combo))
        if t not in seen:
            seen.add(t)
    yield from sorted(seen)


class WinTable:
    """Least-fixpoint labeling of all game states for one (graph, k, variant).

    rank_cop[m, r] / rank_robber[m, r] give the entry sweep of state
    (multiset m, robber r) with the cop / robber to move, or -1 when the
    robber survives from it.  The rank is the number of cop moves needed to
    force capture: >= 1 for cop-to-move states, and 0 exactly for
    robber-to-move states where every robber move is an immediate loss.
    """

    def __init__(self, graph: Graph, k: int, variant: Variant,
                 rank_cop: np.ndarray, rank_robber: np.ndarray, sweeps: int):
        self.graph = graph
        self.k = k
        self.variant = variant
        self.rank_cop = rank_cop
        self.rank_robber = rank_robber
        self.sweeps = sweeps
        self.fingerprint = fingerprint(graph)
        self.n_multisets = rank_cop.shape[0]

    def index(self, cops: tuple[int, ...]) -> int:
        cops = tuple(sorted(cops))
        if len(cops) != self.k:
            raise ValueError(f"expected {self.k} cops, got {len(cops)}")
        if cops and (cops[0] < 0 or cops[-1] >= self.graph.n):
            raise ValueError(f"cop vertex out of range in {cops}")
        return multiset_rank(cops)

    def rank(self, state: GameState) -> Optional[int]:
        """Entry rank of a cop-win state, None if the robber survives."""
        arr = self.rank_cop if state.cop_to_move else self.rank_robber
        r = int(arr[self.index(state.cops), state.robber])
        return None if r < 0 else r

    def is_cop_win(self, state: GameState) -> bool:
        return self.rank(state) is not None

    def wins_all_starts(self, cops: tuple[int, ...]) -> bool:
        """True when every robber start loses against this placement."""
        return bool((self.rank_cop[self.index(cops)] >= 0).all())

    def max_rank(self, cops: tuple[int, ...]) -> int:
        return int(self.rank_cop[self.index(cops)].max())

    def winning_placement_indices(self) -> np.ndarray:
        return np.flatnonzero((self.rank_cop >= 0).all(axis=1))


def solve_win_table(g: Graph, k: int, variant: Variant,
                    budget: int = DEFAULT_BUDGET) -> WinTable:
    """Backward-induction win table for k cops on g under `variant`."""
    if k < 1:
        raise SolverError(f"need at least one cop, got k={k}")
    if g.n > MAX_VERTICES:
        raise SolverError(
            f"solver bitboards support at most {MAX_VERTICES} vertices, got {g.n}"
        )
    states = 2 * multiset_count(g.n, k) * g.n
    if states > budget:
        raise BudgetExceededError(states, budget)
    move_lists = [sorted(legal_moves(g, v, variant)) for v in range(g.n)]
    rank_c, rank_r, sweeps = run_fixpoint(
        g.n, k, move_lists, variant.capture_on_robber_move
    )
    return WinTable(g, k, variant, rank_c, rank_r, sweeps)


# ---------------------------------------------------------------------------
# Placements and cop number
# ---------------------------------------------------------------------------


def _placement_sort_key(bip: Bipartition, k: int) -> Callable[[tuple[int, ...]], tuple]:
    """Balanced partite splits first on bipartite graphs, then lexicographic."""
    if not bip.valid or bip.parts is None:
        return lambda t: (0, t)
    parts = bip.parts

    def key(t: tuple[int, ...]) -> tuple:
        a = sum(1 for v in t if parts[v] == 0)
        return (abs(2 * a - k), t)

    return key


def winning_placements(g: Graph, k: int, variant: Variant,
                       table: WinTable) -> list[tuple[int, ...]]:
    """All cop multisets that defeat every robber start, best-first.

    Placement is not a move, so placing on top of the robber captures
    nothing by itself; a placement wins exactly when every cop-to-move
    start state is in the win set.
    """
    if table.k != k or table.variant != variant or table.fingerprint != fingerprint(g):
        raise ValueError("win table does not match (graph, k, variant)")
    multisets = all_multisets(g.n, k)
    winners = [multisets[int(m)] for m in table.winning_placement_indices()]
    winners.sort(key=_placement_sort_key(bipartition(g), k))
    return winners


@dataclass
class PerK:
    """Why k cops fail: a robber start escaping every placement when one
    exists, otherwise the start escaping the most placements."""

    k: int
    robber_witness: int
    escapes_all: bool


@dataclass
class ComponentOutcome:
    vertices: tuple[int, ...]
    outcome: "SolveOutcome"


@dataclass
class SolveOutcome:
    variant: Variant
    cop_number: int
    placement: tuple[int, ...]
    per_k: list[PerK]
    lower_bound: int
    cap: int
    max_rank: int
    table: Optional[WinTable] = None
    component_outcomes: Optional[list[ComponentOutcome]] = None
    graph: Optional[Graph] = field(default=None, repr=False)

    def to_jsonable(self) -> dict:
        out = {
            "variant": self.variant.value,
            "copNumber": self.cop_number,
            "placement": list(self.placement),
            "perK": [
                {"k": p.k, "robberWitness": p.robber_witness,
                 "escapesAll": p.escapes_all}
                for p in self.per_k
            ],
            "ranks": {"max": self.max_rank},
        }
        if self.component_outcomes is not None:
            out["components"] = [
                {"vertices": list(c.vertices),
                 "copNumber": c.outcome.cop_number,
                 "placement": list(c.outcome.placement)}
                for c in self.component_outcomes
            ]
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable())


def _lower_bound(g: Graph, variant: Variant) -> int:
    # A lone cop on a loopless graph loses the sneaky-active game to a
    # robber who starts on the cop and shadows every cop move; with loops,
    # or in the other variants, one cop can suffice.
    if variant is Variant.SNEAKY_ACTIVE and not g.has_any_loop():
        return 2
    return 1


def _failure_witness(table: WinTable) -> PerK:
    escapes = (table.rank_cop < 0).sum(axis=0)
    full = int(table.n_multisets)
    best = int(np.argmax(escapes))
    return PerK(table.k, best, bool(escapes[best] == full))


def _cop_number_connected(g: Graph, variant: Variant, cap: int,
                          budget: int) -> SolveOutcome:
    lb = _lower_bound(g, variant)
    per_k: list[PerK] = []
    for k in range(lb, cap + 1):
        table = solve_win_table(g, k, variant, budget)
        winners = winning_placements(g, k, variant, table)
        if winners:
            placement = winners[0]
            return SolveOutcome(
                variant=variant,
                cop_number=k,
                placement=placement,
                per_k=per_k,
                lower_bound=lb,
                cap=cap,
                max_rank=table.max_rank(placement),
                table=table,
                graph=g,
            )
        per_k.append(_failure_witness(table))
    raise CapExceededError(cap, per_k)


def cop_number(g: Graph, variant: Variant, cap: Optional[int] = None,
               budget: int = DEFAULT_BUDGET) -> SolveOutcome:
    """Minimum number of cops with a winning strategy, with witnesses.

    Disconnected graphs decompose: the robber commits to one component, so
    the cop number is the sum of the per-component cop numbers and a
    winning placement is the union of per-component winning placements.
    """
    comps = components(g)
    if len(comps) == 1:
        return _cop_number_connected(g, variant, cap if cap is not None else g.n, budget)
    outs: list[ComponentOutcome] = []
    placement: list[int] = []
    total = 0
    max_rank = 0
    lb_total = 0
    for comp in comps:
        sub_cap = min(cap, comp.graph.n) if cap is not None else comp.graph.n
        out = _cop_number_connected(comp.graph, variant, sub_cap, budget)
        outs.append(ComponentOutcome(comp.vertices, out))
        placement.extend(comp.to_parent[v] for v in out.placement)
        total += out.cop_number
        max_rank = max(max_rank, out.max_rank)
        lb_total += out.lower_bound
    if cap is not None and total > cap:
        raise CapExceededError(cap, [])
    return SolveOutcome(
        variant=variant,
        cop_number=total,
        placement=tuple(sorted(placement)),
        per_k=[],
        lower_bound=lb_total,
        cap=cap if cap is not None else g.n,
        max_rank=max_rank,
        table=None,
        component_outcomes=outs,
        graph=g,
    )


# ---------------------------------------------------------------------------
# Strategies and traces
# ---------------------------------------------------------------------------


class Strategy:
    """Table-backed play for both sides.

    Cop side: from a cop-win cop-to-move state, the joint move minimizing
    the successor rank (capture counts as 0), ties broken by the
    lexicographically least target multiset; rank strictly decreases until
    capture.  From hopeless states cops still capture when they can, else
    take the lex-least move.

    Robber side: a move to a surviving state when one exists, otherwise a
    rank-maximizing move (instant losses count as rank 0).
    """

    def __init__(self, table: WinTable):
        self.table = table
        self.graph = table.graph
        self.variant = table.variant

    def _cop_move_score(self, target: tuple[int, ...], robber: int) -> float:
        if robber in target:
            return 0
        r = self.table.rank(GameState(target, robber, cop_to_move=False))
        return float("inf") if r is None else r

    def cop_move(self, state: GameState) -> tuple[int, ...]:
        best = None
        for target in joint_cop_moves(self.graph, state.cops, self.variant):
            score = self._cop_move_score(target, state.robber)
            if best is None or (score, target) < best:
                best = (score, target)
        assert best is not None
        return best[1]

    def _robber_move_score(self, cops: tuple[int, ...], target: int) -> float:
        if self.variant.capture_on_robber_move and target in cops:
            return 0
        r = self.table.rank(GameState(cops, target, cop_to_move=True))
        return float("inf") if r is None else r

    def robber_move(self, state: GameState) -> int:
        options = sorted(legal_moves(self.graph, state.robber, self.variant))
        return max(options, key=lambda t: (self._robber_move_score(state.cops, t), -t))

    def robber_place(self, placement: tuple[int, ...]) -> int:
        # Placement is not a move, so standing on a cop is not an instant
        # loss here even in the capture-on-robber-move variants.
        placement = tuple(sorted(placement))

        def score(r: int) -> float:
            rk = self.table.rank(GameState(placement, r, cop_to_move=True))
            return float("inf") if rk is None else rk

        return max(range(self.graph.n), key=lambda r: (score(r), -r))


def extract_strategy(table: WinTable, placement: tuple[int, ...]) -> Strategy:
    """Strategy object for a placement that defeats every robber start."""
    if not table.wins_all_starts(tuple(sorted(placement))):
        raise NotWinningError(f"placement {placement} does not defeat all robber starts")
    return Strategy(table)


class RandomRobber:
    """Seeded uniformly random robber (placement and moves)."""

    def __init__(self, seed: int):
        self.rng = random.Random(seed)

    def place(self, g: Graph, placement: tuple[int, ...]) -> int:
        return self.rng.randrange(g.n)

    def move(self, g: Graph, variant: Variant, state: GameState) -> int:
        return self.rng.choice(sorted(legal_moves(g, state.robber, variant)))


class EvadingRobber:
    """Table-backed robber: survive when possible, stall otherwise."""

    def __init__(self, table: WinTable):
        self.strategy = Strategy(table)

    def place(self, g: Graph, placement: tuple[int, ...]) -> int:
        return self.strategy.robber_place(placement)

    def move(self, g: Graph, variant: Variant, state: GameState) -> int:
        return self.strategy.robber_move(state)


@dataclass
class TraceTurn:
    ply: int
    mover: str  # "place", "cop" or "robber"
    cops: tuple[int, ...]
    robber: int
    capture: bool

    def to_jsonable(self) -> dict:
        return {
            "ply": self.ply,
            "mover": self.mover,
            "cops": list(self.cops),
            "robber": self.robber,
            "capture": self.capture,
        }


@dataclass
class Trace:
    variant: Variant
    turns: list[TraceTurn]
    captured: bool
    cop_turns: int

    def to_json(self) -> str:
        return json.dumps([t.to_jsonable() for t in self.turns])


def simulate_trace(g: Graph, variant: Variant, placement: tuple[int, ...],
                   robber_policy, max_turns: int,
                   table: Optional[WinTable] = None,
                   robber_start: Optional[int] = None) -> Trace:
    """Play out a game: cops follow the table strategy, the robber follows
    `robber_policy` (an object with place/move).  A turn is one side's move;
    the trace stops at capture or after max_turns moves.

    When the placement wins, capture happens within rank(start) cop turns
    no matter what the robber does.
    """
    placement = tuple(sorted(placement))
    if table is None:
        table = solve_win_table(g, len(placement), variant)
    strategy = Strategy(table)
    robber = robber_policy.place(g, placement) if robber_start is None else robber_start
    cops = placement
    turns = [TraceTurn(0, "place", cops, robber, False)]
    captured = False
    cop_turns = 0
    ply = 0
    cop_to_move = True
    while ply < max_turns and not captured:
        ply += 1
        if cop_to_move:
            cops = strategy.cop_move(GameState(cops, robber, True))
            cop_turns += 1
            captured = robber in cops
            turns.append(TraceTurn(ply, "cop", cops, robber, captured))
        else:
            robber = robber_policy.move(g, variant, GameState(cops, robber, False))
            captured = variant.capture_on_robber_move and robber in cops
            turns.append(TraceTurn(ply, "robber", cops, robber, captured))
        cop_to_move = not cop_to_move
    return Trace(variant, turns, captured, cop_turns)
