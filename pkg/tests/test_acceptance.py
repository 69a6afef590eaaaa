"""Acceptance criteria, one test per criterion, one pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as the
criteria complete.  Every expected value is exact; time budgets are
asserted too (they are generous on a desktop core).
"""

import random
import time
from functools import lru_cache
from itertools import combinations, product as iproduct

import pytest

import sneakycops as sc
from sneakycops import EvadingRobber, GameState, RandomRobber, Variant
from sneakycops.verify import bounds_corpus, invariance_corpus

from oracle import oracle_solve

SNEAKY = Variant.SNEAKY_ACTIVE


def F(token):
    g = sc.from_shorthand(token)
    assert g is not None
    return g


@lru_cache(maxsize=None)
def solved(token: str):
    """Sneaky-active solve of a family token or product expression 'A x B'/'A box B'."""
    parts = token.split()
    if len(parts) == 3:
        a, op, b = parts
        build = sc.categorical_product if op == "x" else sc.box_product
        g, _ = build(F(a), F(b))
    else:
        g = F(token)
    return g, sc.cop_number(g, SNEAKY)


def report(criterion: str, elapsed: float, budget_s: float, ok: bool = True):
    status = "PASS" if ok else "FAIL"
    print(f"{status} {criterion} ({elapsed:.1f}s, budget {budget_s:.0f}s)")
    assert ok
    assert elapsed < budget_s


FIGURE_TABLE = [
    ("C3", 2), ("C5", 2), ("C7", 2),
    ("C6", 4), ("C8", 4),
    ("P2", 2), ("P3", 2), ("P4", 2), ("P5", 2), ("P6", 2),
    ("K2", 2), ("K3", 2), ("K4", 2), ("K5", 2),
    ("K5_2", 3), ("K6_2", 3),
]


def test_criterion_1_family_table():
    t0 = time.time()
    for token, expected in FIGURE_TABLE:
        _, out = solved(token)
        assert out.cop_number == expected, token
    report("criterion 1: family cop-number table", time.time() - t0, 120)


def test_criterion_2_worked_examples():
    t0 = time.time()
    for token, expected in [("P5", 2), ("C4", 2), ("P3", 2), ("I4l", 1)]:
        _, out = solved(token)
        assert out.cop_number == expected, token
    report("criterion 2: worked examples", time.time() - t0, 5)


def test_criterion_3_homotopy_invariance():
    t0 = time.time()
    checks = invariance_corpus(seed=910, count=26, steps=4)
    assert len(checks) >= 25
    assert all(c.passed for c in checks), [c.id for c in checks if not c.passed]

    networkx = pytest.importorskip("networkx")
    k2 = F("K2")
    trees = 0
    for n in range(2, 11):
        for t in networkx.nonisomorphic_trees(n):
            g = sc.build(n, list(t.edges()))
            core, _ = sc.dismantle(g)
            assert sc.isomorphic(core, k2) is not None
            trees += 1
    assert trees == 200  # nonisomorphic trees on 2..10 vertices
    report("criterion 3: fold invariance and tree dismantling", time.time() - t0, 600)


def test_criterion_4_variant_bounds():
    t0 = time.time()
    checks = bounds_corpus(seed=714, count=50)
    chain = [c for c in checks if c.id.endswith("chain")]
    reflexive = [c for c in checks if c.id.endswith("reflexive")]
    assert len(chain) == 50 and len(reflexive) >= 10
    assert all(c.passed for c in checks), [c.id for c in checks if not c.passed]
    report("criterion 4: variant bound chain on 50 random graphs",
           time.time() - t0, 900)


CATEGORICAL_CASES = [
    ("C3 x C3", 3), ("C3 x C5", 3),
    ("C3 x K2", 4), ("C3 x P3", 4),
    ("K2 x K2", 4), ("P3 x P3", 4),
]


def test_criterion_5_categorical_products():
    t0 = time.time()
    for token, expected in CATEGORICAL_CASES:
        _, out = solved(token)
        assert out.cop_number == expected, token
    report("criterion 5: categorical product values", time.time() - t0, 600)


BOX_CASES = [
    ("K3l box K3l", 2), ("K2 box C4", 4), ("T box C4", 2), ("P3 box P3", 2),
    ("Q3", 4), ("K3 box K3", 3), ("K3 box K4", 3),
]


def test_criterion_6_box_products():
    t0 = time.time()
    for token, expected in BOX_CASES:
        _, out = solved(token)
        assert out.cop_number == expected, token
    report("criterion 6: box product values (excluding Q4)", time.time() - t0, 1200)


def test_criterion_6b_q4():
    t0 = time.time()
    _, out = solved("Q4")
    assert out.cop_number == 4
    report("criterion 6b: Q4", time.time() - t0, 1800)


def test_criterion_7_box_cycle_bounds():
    t0 = time.time()
    _, out33 = solved("C3 box C3")
    assert out33.cop_number in (2, 3)
    _, out44 = solved("C4 box C4")
    assert out44.cop_number in (4, 6)
    report(
        f"criterion 7: box cycle bounds (exact values: "
        f"C3boxC3={out33.cop_number}, C4boxC4={out44.cop_number})",
        time.time() - t0, 7200,
    )


def test_criterion_8_bipartite_split():
    t0 = time.time()
    for token in ["C6", "C8", "Q3", "P5"]:
        g, out = solved(token)
        k = out.cop_number
        table = sc.solve_win_table(g, k, SNEAKY)
        placements = sc.winning_placements(g, k, SNEAKY, table)
        bip = sc.bipartition(g)
        assert bip.valid and placements
        for p in placements:
            assert sum(1 for v in p if bip.parts[v] == 0) == k // 2, (token, p)
    report("criterion 8: bipartite placement split", time.time() - t0, 300)


def _connected_classes(n):
    """All connected unlooped graphs on n vertices, one per isomorphism
    class (1, 1, 2, 6, 21 classes for n = 1..5)."""
    if n == 1:
        return []
    possible = list(combinations(range(n), 2))
    classes = []
    for bits in iproduct((0, 1), repeat=len(possible)):
        edges = [e for e, b in zip(possible, bits) if b]
        if len(edges) < n - 1:
            continue
        try:
            g = sc.build(n, edges)
        except Exception:
            continue
        if not sc.is_connected(g):
            continue
        if all(sc.isomorphic(g, h) is None for h in classes):
            classes.append(g)
    return classes


def _oracle_corpus():
    """Every connected graph on <= 5 vertices up to isomorphism, decorated
    with loop patterns (all patterns for n <= 4, sampled for n = 5)."""
    rng = random.Random(20240)
    graphs = [F("T")]
    for n in (2, 3, 4):
        for base in _connected_classes(n):
            edges = list(base.edges())
            for bits in iproduct((0, 1), repeat=n):
                loops = [(v, v) for v in range(n) if bits[v]]
                graphs.append(sc.build(n, edges + loops))
    for base in _connected_classes(5):
        edges = list(base.edges())
        patterns = {(0,) * 5, (1,) * 5}
        while len(patterns) < 5:
            patterns.add(tuple(int(rng.random() < 0.3) for _ in range(5)))
        for bits in sorted(patterns):
            loops = [(v, v) for v in range(5) if bits[v]]
            graphs.append(sc.build(5, edges + loops))
    return graphs


def test_criterion_9_oracle_equivalence():
    t0 = time.time()
    corpus = _oracle_corpus()
    assert len(corpus) >= 200
    states = 0
    for g in corpus:
        for k in (1, 2):
            for variant in Variant:
                table = sc.solve_win_table(g, k, variant)
                cop_rank, robber_rank = oracle_solve(g, k, variant)
                for (cops, r), want in cop_rank.items():
                    assert table.rank(GameState(cops, r, True)) == want
                    states += 1
                for (cops, r), want in robber_rank.items():
                    assert table.rank(GameState(cops, r, False)) == want
                    states += 1
    report(
        f"criterion 9: oracle equivalence on {len(corpus)} graphs "
        f"({states} states)", time.time() - t0, 1800,
    )


def _strategy_sound(g, out):
    table = out.table
    strategy = sc.extract_strategy(table, out.placement)
    assert strategy is not None
    # rank-maximizing robber from every start
    for r in range(g.n):
        rank = table.rank(GameState(out.placement, r))
        trace = sc.simulate_trace(g, SNEAKY, out.placement, EvadingRobber(table),
                                  2 * rank + 2, table=table, robber_start=r)
        assert trace.captured and trace.cop_turns <= rank
    # ten random robbers, each captured within its own start's rank
    for seed in range(10):
        trace = sc.simulate_trace(g, SNEAKY, out.placement, RandomRobber(seed),
                                  2 * table.max_rank(out.placement) + 2, table=table)
        assert trace.captured
        assert trace.cop_turns <= table.rank(GameState(out.placement,
                                                       trace.turns[0].robber))
    # below the cop number the evader survives 10|V| plies
    for k in range(out.lower_bound, out.cop_number):
        low = sc.solve_win_table(g, k, SNEAKY)
        assert not sc.winning_placements(g, k, SNEAKY, low)
        placement = tuple([0] * k)
        trace = sc.simulate_trace(g, SNEAKY, placement, EvadingRobber(low),
                                  10 * g.n, table=low)
        assert not trace.captured


def test_criterion_10_strategy_soundness():
    t0 = time.time()
    tokens = ([t for t, _ in FIGURE_TABLE] + ["C4", "I4l"]
              + [t for t, _ in CATEGORICAL_CASES]
              + [t for t, _ in BOX_CASES] + ["Q4"])
    count = 0
    for token in dict.fromkeys(tokens):
        g, out = solved(token)
        if out.component_outcomes:
            # disconnected products: check each component's own game
            for comp in out.component_outcomes:
                _strategy_sound(comp.outcome.graph, comp.outcome)
                count += 1
        else:
            _strategy_sound(g, out)
            count += 1
    report(f"criterion 10: strategy soundness on {count} solved games",
           time.time() - t0, 1200)
