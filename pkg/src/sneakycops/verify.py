"""Reproduction harness: every known cop-number fact as a pass/fail check.

Each Check records what was claimed (an exact value or a set of admissible
values), what the solver computed, and a short citation naming the claim it
reproduces.  Suites: "basic" covers the family table, the worked examples
and the bipartite placement split; "products" the categorical product
formulas; "box" the box product values and bounds; "all" adds the seeded
random-graph bound corpus and the fold-invariance corpus.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass
from typing import Sequence

from . import families
from .graphs import Graph, bipartition, build, components, is_connected, isomorphic
from .homotopy import homotopy_equivalent, random_perturbation
from .products import box_product, categorical_product, strong_product
from .solver import Variant, cop_number, winning_placements

SUITES = ("basic", "products", "box", "all")

DEFAULT_SEED = 20240
DEFAULT_BOUNDS_COUNT = 50
DEFAULT_INVARIANCE_COUNT = 26
DEFAULT_INVARIANCE_STEPS = 4


@dataclass
class Check:
    id: str
    description: str
    expected: object
    got: object
    passed: bool
    citation: str
    ms: float

    def to_jsonable(self, timings: bool = False) -> dict:
        return {
            "id": self.id,
            "expected": self.expected,
            "got": self.got,
            "pass": self.passed,
            "citation": self.citation,
            "ms": round(self.ms, 1) if timings else None,
        }


def _run(check_id: str, description: str, expected, citation: str, worker) -> Check:
    t0 = time.perf_counter()
    got = worker()
    ms = (time.perf_counter() - t0) * 1000.0
    if isinstance(expected, (list, tuple, set, frozenset)):
        passed = got in expected
        expected_out = sorted(expected)
    else:
        passed = got == expected
        expected_out = expected
    return Check(check_id, description, expected_out, got, passed, citation, ms)


def _sneaky(g: Graph) -> int:
    return cop_number(g, Variant.SNEAKY_ACTIVE).cop_number


# ---------------------------------------------------------------------------
# basic suite
# ---------------------------------------------------------------------------

_FAMILY_TABLE = [
    ("C3", 2, "odd cycle family value"),
    ("C5", 2, "odd cycle family value"),
    ("C7", 2, "odd cycle family value"),
    ("C6", 4, "even cycle family value"),
    ("C8", 4, "even cycle family value"),
    ("P2", 2, "tree family value"),
    ("P3", 2, "tree family value"),
    ("P4", 2, "tree family value"),
    ("P5", 2, "tree family value"),
    ("P6", 2, "tree family value"),
    ("K2", 2, "complete graph family value"),
    ("K3", 2, "complete graph family value"),
    ("K4", 2, "complete graph family value"),
    ("K5", 2, "complete graph family value"),
    ("K5_2", 3, "Petersen graph value"),
    ("K6_2", 3, "Kneser K(n,2) family value"),
]

_WORKED_EXAMPLES = [
    ("P5", 2, "worked example: shadowing beats one cop, two suffice"),
    ("C4", 2, "worked example: 4-cycle folds to the 2-path"),
    ("P3", 2, "worked example: 4-cycle folds to the 2-path"),
    ("I4l", 1, "worked example: reflexive path plays like the classic game"),
]

_SPLIT_GRAPHS = ["C6", "C8", "Q3", "P5"]


def _split_balanced(token: str) -> bool:
    g = families.from_shorthand(token)
    assert g is not None
    out = cop_number(g, Variant.SNEAKY_ACTIVE)
    k = out.cop_number
    assert out.table is not None
    placements = winning_placements(g, k, Variant.SNEAKY_ACTIVE, out.table)
    bip = bipartition(g)
    assert bip.valid and bip.parts is not None and placements
    return all(
        sum(1 for v in p if bip.parts[v] == 0) == k // 2 for p in placements
    )


def basic_suite() -> list[Check]:
    checks = []
    for token, expected, citation in _FAMILY_TABLE:
        g = families.from_shorthand(token)
        assert g is not None
        checks.append(_run(
            f"family/{token}",
            f"sneaky-active cop number of {token}",
            expected, citation,
            lambda g=g: _sneaky(g),
        ))
    for token, expected, citation in _WORKED_EXAMPLES:
        g = families.from_shorthand(token)
        assert g is not None
        checks.append(_run(
            f"example/{token}",
            f"sneaky-active cop number of {token}",
            expected, citation,
            lambda g=g: _sneaky(g),
        ))
    for token in _SPLIT_GRAPHS:
        checks.append(_run(
            f"split/{token}",
            f"every minimal winning placement on {token} puts half the cops in each partite set",
            True, "bipartite placement split",
            lambda t=token: _split_balanced(t),
        ))
    return checks


# ---------------------------------------------------------------------------
# products suite
# ---------------------------------------------------------------------------


def _cat(a: str, b: str) -> Graph:
    ga, gb = families.from_shorthand(a), families.from_shorthand(b)
    assert ga is not None and gb is not None
    return categorical_product(ga, gb)[0]


def _box(a: str, b: str) -> Graph:
    ga, gb = families.from_shorthand(a), families.from_shorthand(b)
    assert ga is not None and gb is not None
    return box_product(ga, gb)[0]


def products_suite() -> list[Check]:
    checks = [
        _run("product/C3xC3", "categorical product of two odd cycles", 3,
             "categorical product, both factors non-bipartite: x+y-1",
             lambda: _sneaky(_cat("C3", "C3"))),
        _run("product/C3xC5", "categorical product of two odd cycles", 3,
             "categorical product, both factors non-bipartite: x+y-1",
             lambda: _sneaky(_cat("C3", "C5"))),
        _run("product/C3xK2", "categorical product, one bipartite factor", 4,
             "categorical product, one bipartite factor: 2x+y-2",
             lambda: _sneaky(_cat("C3", "K2"))),
        _run("product/C3xP3", "categorical product, one bipartite factor", 4,
             "categorical product, one bipartite factor: 2x+y-2",
             lambda: _sneaky(_cat("C3", "P3"))),
        _run("product/K2xK2", "categorical product of two bipartite factors", 4,
             "categorical product, both factors bipartite: 2x+2y-4 over two components",
             lambda: _sneaky(_cat("K2", "K2"))),
        _run("product/P3xP3", "categorical product of two bipartite factors", 4,
             "categorical product, both factors bipartite: 2x+2y-4 over two components",
             lambda: _sneaky(_cat("P3", "P3"))),
        _run("product/C3xK2-iso-C6", "C3 x K2 is the 6-cycle", True,
             "odd cycle times an edge is an even cycle",
             lambda: isomorphic(_cat("C3", "K2"),
                                families.from_shorthand("C6")) is not None),
        _run("product/C4xK2-components", "bipartite x bipartite splits in two", 2,
             "categorical product of bipartite graphs is disconnected",
             lambda: len(components(_cat("C4", "K2")))),
        _run("product/strong-classic", "classic game on a strong product", 3,
             "strong product under the classic game: x+y-1",
             lambda: cop_number(strong_product(
                 families.from_shorthand("C4"),
                 families.from_shorthand("C4"))[0],
                 Variant.CLASSIC).cop_number),
    ]
    return checks


# ---------------------------------------------------------------------------
# box suite
# ---------------------------------------------------------------------------


def box_suite() -> list[Check]:
    checks = [
        _run("box/K3l-K3l", "box product of reflexive triangles", 2,
             "tight non-bipartite box bound: x+y",
             lambda: _sneaky(_box("K3l", "K3l"))),
        _run("box/K2-C4", "box product K2 and C4 (the 3-cube)", 4,
             "tight bipartite box bound: x+y",
             lambda: _sneaky(_box("K2", "C4"))),
        _run("box/K2-C4-iso-Q3", "K2 box C4 is the 3-cube", True,
             "hypercube factorization",
             lambda: isomorphic(_box("K2", "C4"),
                                families.from_shorthand("Q3")) is not None),
        _run("box/T-C4", "box product of the looped point and C4", 2,
             "tight half-bipartite box bound: x/2+y",
             lambda: _sneaky(_box("T", "C4"))),
        _run("box/T-C4-iso-C4l", "T box C4 is the reflexive 4-cycle", True,
             "looped factor makes the box product reflexive",
             lambda: isomorphic(_box("T", "C4"),
                                families.from_shorthand("C4l")) is not None),
        _run("box/P3-P3", "box product of two paths", 2,
             "box product of two trees",
             lambda: _sneaky(_box("P3", "P3"))),
        _run("box/Q3", "3-dimensional hypercube", 4,
             "box product of an odd number of trees",
             lambda: _sneaky(families.from_shorthand("Q3"))),
        _run("box/Q4", "4-dimensional hypercube", 4,
             "box product of an even number of trees",
             lambda: _sneaky(families.from_shorthand("Q4"))),
        _run("box/K3-K3", "box product of complete graphs", 3,
             "box product of complete graphs beyond K2",
             lambda: _sneaky(_box("K3", "K3"))),
        _run("box/K3-K4", "box product of complete graphs", 3,
             "box product of complete graphs beyond K2",
             lambda: _sneaky(_box("K3", "K4"))),
        _run("box/C3-C3", "box product of two odd cycles (exact value reported)",
             [2, 3], "box of k cycles with an odd factor: between k and k+1",
             lambda: _sneaky(_box("C3", "C3"))),
        _run("box/C4-C4", "box product of two even cycles (exact value reported)",
             [4, 6], "box of k even cycles: 2k or 2k+2",
             lambda: _sneaky(_box("C4", "C4"))),
    ]
    for a, b, kind in [
        ("C5", "C5", "neither factor bipartite: x+y"),
        ("P3", "C6", "both factors bipartite: x+y"),
        ("C4", "C3", "one factor bipartite: x/2+y"),
        ("P4", "C5", "one factor bipartite: x/2+y"),
    ]:
        ga, gb = families.from_shorthand(a), families.from_shorthand(b)
        assert ga is not None and gb is not None
        xa, xb = _sneaky(ga), _sneaky(gb)
        bound = xa // 2 + xb if kind.startswith("one") else xa + xb
        checks.append(_run(
            f"box/bound-{a}-{b}",
            f"box product upper bound for {a} box {b}",
            list(range(1, bound + 1)),
            f"box product bound, {kind}",
            lambda a=a, b=b: _sneaky(_box(a, b)),
        ))
    for seed in (5, 11):
        t1 = families.random_tree(5, seed)
        t2 = families.random_tree(6, seed + 1)
        tree_box = box_product(t1, t2)[0]
        checks.append(_run(
            f"box/trees-{seed}",
            "box product of two random trees",
            2, "box product of two trees",
            lambda g=tree_box: _sneaky(g),
        ))
        checks.append(_run(
            f"box/trees-{seed}-core",
            "box product of two random trees dismantles to an edge",
            True, "tree box products fold to K2",
            lambda g=tree_box: homotopy_equivalent(g, families.complete(2)) is not None,
        ))
    return checks


# ---------------------------------------------------------------------------
# random corpora
# ---------------------------------------------------------------------------


def random_connected_graph(rng: random.Random, n_lo: int = 5, n_hi: int = 9,
                           loop_p: float = 0.2) -> Graph:
    """Erdos-Renyi with loops, regenerated until connected (hence no
    isolated vertex either)."""
    while True:
        n = rng.randint(n_lo, n_hi)
        p = rng.choice([0.3, 0.5])
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
        ]
        edges += [(v, v) for v in range(n) if rng.random() < loop_p]
        try:
            g = build(n, edges)
        except Exception:
            continue
        if is_connected(g):
            return g


def bounds_corpus(seed: int = DEFAULT_SEED,
                  count: int = DEFAULT_BOUNDS_COUNT) -> list[Check]:
    """Random graphs: check the variant comparison chain on every sample,
    the reflexive collapse on reflexive samples, and the loopless lower
    bound on loopless samples.  Every fifth sample is made reflexive."""
    rng = random.Random(seed)
    checks = []
    for i in range(count):
        g = random_connected_graph(rng)
        if i % 5 == 4:
            g = build(g.n, list(g.edges()) + [(v, v) for v in range(g.n)])
        c = cop_number(g, Variant.CLASSIC).cop_number
        ca = cop_number(g, Variant.FULLY_ACTIVE).cop_number
        cs = cop_number(g, Variant.SNEAKY_ACTIVE).cop_number
        checks.append(Check(
            f"bounds/{i}/chain",
            f"variant chain on sample {i} (n={g.n}): c={c} c_A={ca} c_SA={cs}",
            True, ca <= cs and c - 1 <= cs <= 2 * c,
            ca <= cs and c - 1 <= cs <= 2 * c,
            "active <= sneaky-active and classic-1 <= sneaky-active <= 2*classic",
            0.0,
        ))
        if g.is_reflexive():
            checks.append(Check(
                f"bounds/{i}/reflexive",
                f"reflexive sample {i}: sneaky-active equals classic",
                c, cs, cs == c,
                "reflexive graphs play the classic game", 0.0,
            ))
        if not g.has_any_loop():
            checks.append(Check(
                f"bounds/{i}/loopless",
                f"loopless sample {i}: at least two cops",
                True, cs >= 2, cs >= 2,
                "a lone cop on a loopless graph is shadowed forever", 0.0,
            ))
    return checks


_INVARIANCE_BASES = ["K2", "P4", "C4", "C5", "C7", "K5_2"]


def invariance_corpus(seed: int = DEFAULT_SEED,
                      count: int = DEFAULT_INVARIANCE_COUNT,
                      steps: int = DEFAULT_INVARIANCE_STEPS) -> list[Check]:
    """Fold-equivalent pairs must have equal sneaky-active cop numbers."""
    checks = []
    for i in range(count):
        token = _INVARIANCE_BASES[i % len(_INVARIANCE_BASES)]
        base = families.from_shorthand(token)
        assert base is not None
        pert = random_perturbation(base, steps, seed + i)
        want = _sneaky(base)
        checks.append(_run(
            f"invariance/{i}/{token}",
            f"perturbed {token} (n={pert.n}) keeps its cop number",
            want, "cop number is a fold invariant",
            lambda g=pert: _sneaky(g),
        ))
    return checks


# ---------------------------------------------------------------------------
# suite driver
# ---------------------------------------------------------------------------


def verify_suite(name: str, seed: int = DEFAULT_SEED,
                 bounds_count: int = DEFAULT_BOUNDS_COUNT,
                 invariance_count: int = DEFAULT_INVARIANCE_COUNT) -> list[Check]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
    checks: list[Check] = []
    if name in ("basic", "all"):
        checks.extend(basic_suite())
    if name in ("products", "all"):
        checks.extend(products_suite())
    if name in ("box", "all"):
        checks.extend(box_suite())
    if name == "all":
        checks.extend(bounds_corpus(seed, bounds_count))
        checks.extend(invariance_corpus(seed, invariance_count))
    return checks


def render_text(checks: Sequence[Check], timings: bool = True) -> str:
    lines = []
    width = max((len(c.id) for c in checks), default=10)
    for c in checks:
        status = "pass" if c.passed else "FAIL"
        t = f" ({c.ms:7.1f} ms)" if timings else ""
        lines.append(f"{status}  {c.id:<{width}}  expected {c.expected!r}, got {c.got!r}{t}")
    total = len(checks)
    good = sum(1 for c in checks if c.passed)
    lines.append(f"{good}/{total} checks passed")
    return "\n".join(lines)


def render_json(suite: str, checks: Sequence[Check], timings: bool = False) -> str:
    return json.dumps(
        {"suite": suite, "checks": [c.to_jsonable(timings) for c in checks]},
        indent=None,
        separators=(",", ":"),
    )
