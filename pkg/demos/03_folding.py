"""Folds, dismantling, and why the sneaky-active cop number is stable.

A fold deletes a vertex x whose loop-inclusive neighborhood fits inside
another vertex's (N(x) within N(x')).  Exhaustive folding reaches a stiff
core; two graphs are equivalent when their cores match.  The point of the
sneaky-active rules is that its cop number never changes along a fold, so
equivalent graphs share a cop number.
"""

import sneakycops as sc
from sneakycops import Variant

c4 = sc.from_shorthand("C4")
p3 = sc.from_shorthand("P3")

# On the 4-cycle, opposite corners have identical neighborhoods, so either
# absorbs the other.  One fold turns C4 into P3.
print("foldable pairs of C4:", sc.foldable_pairs(c4))
folded, relabel = sc.fold(c4, 3, 1)
print("fold(C4, 3, 1) ->", folded, "via map", relabel)

# Odd cycles and the Petersen graph are stiff: nothing folds.
print("foldable pairs of C5:", sc.foldable_pairs(sc.from_shorthand("C5")))
print("Petersen is stiff:", sc.is_stiff(sc.from_shorthand("K5_2")))

# Dismantling records a replayable certificate.
core, seq = sc.dismantle(sc.from_shorthand("P6"))
print("\nP6 dismantles to", core, "in", len(seq.steps), "folds:")
print(seq.to_json())
assert seq.replay(sc.from_shorthand("P6")) == core

# Any tree folds down to a single edge, leaves first.
tree = sc.generate(sc.FamilySpec("random_tree", (9,), seed=4))
core, _ = sc.dismantle(tree)
print("random 9-vertex tree core:", core)

# Equivalence = isomorphic cores, certified by both fold sequences.
cert = sc.homotopy_equivalent(c4, p3)
print("\nC4 ~ P3:", cert is not None)
print("C4 ~ C5:", sc.homotopy_equivalent(c4, sc.from_shorthand("C5")) is not None)

# The invariance in action: grow C5 by random unfolds, cop number holds.
for seed in range(3):
    bigger = sc.random_perturbation(sc.from_shorthand("C5"), 5, seed=seed)
    n_sa = sc.cop_number(bigger, Variant.SNEAKY_ACTIVE).cop_number
    print(f"perturbed C5 (seed {seed}): n={bigger.n}, sneaky-active number {n_sa}")

# The classic game does NOT have this stability: C4 and P3 are equivalent,
# yet one classic cop wins on P3 and loses on C4.
print("\nclassic on P3:", sc.cop_number(p3, Variant.CLASSIC).cop_number,
      "  classic on C4:", sc.cop_number(c4, Variant.CLASSIC).cop_number)
