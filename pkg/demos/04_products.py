"""Graph products and the arithmetic of their cop numbers.

Categorical product: a move is a simultaneous move in both coordinates, so
strategies act coordinate-wise and the cop number follows closed formulas
that depend only on which factors are bipartite.  Box product: a move
changes exactly one coordinate; here only bounds are known in general, and
the solver pins down exact values.
"""

import sneakycops as sc
from sneakycops import Variant


def sa(g):
    return sc.cop_number(g, Variant.SNEAKY_ACTIVE).cop_number


def F(token):
    return sc.from_shorthand(token)


# Categorical products. With x = c(X), y = c(Y) (sneaky-active):
#   neither factor bipartite      ->  x + y - 1
#   exactly one factor bipartite  ->  2x + y - 2
#   both factors bipartite        ->  2x + 2y - 4 (two components)
cases = [("C3", "C3"), ("C3", "C5"), ("C3", "K2"), ("C3", "P3"),
         ("K2", "K2"), ("P3", "P3")]
print("categorical products:")
for a, b in cases:
    g, _ = sc.categorical_product(F(a), F(b))
    x, y = sa(F(a)), sa(F(b))
    ba, bb = sc.bipartition(F(a)).valid, sc.bipartition(F(b)).valid
    if not ba and not bb:
        formula = x + y - 1
    elif ba and bb:
        formula = 2 * x + 2 * y - 4
    else:
        x, y = (x, y) if bb else (y, x)  # bipartite factor second
        formula = 2 * y + x - 2
    print(f"  {a} x {b}: solver {sa(g)}, formula {formula}")

# Box products: the additive bound x+y is tight on these examples.
print("\nbox products:")
for a, b, note in [
    ("K3l", "K3l", "reflexive, bound x+y=2"),
    ("K2", "C4", "bipartite, bound x+y=4 (this is the 3-cube)"),
    ("T", "C4", "half-bipartite, bound x/2+y=2"),
    ("P3", "P3", "two trees: always 2"),
    ("K3", "K4", "complete factors: always 3"),
]:
    g, _ = sc.box_product(F(a), F(b))
    print(f"  {a} box {b}: solver {sa(g)}  ({note})")

# Box powers of cycles: only bounds are known; the solver reports the
# exact values (3 for C3 box C3, 4 for C4 box C4, which is the 4-cube).
g33, _ = sc.box_product(F("C3"), F("C3"))
g44, _ = sc.box_product(F("C4"), F("C4"))
print(f"\nC3 box C3 in [2,3]: exact {sa(g33)}")
print(f"C4 box C4 in {{4,6}}: exact {sa(g44)}")
print("C4 box C4 is Q4:", sc.isomorphic(g44, F("Q4")) is not None)

# Strong product = categorical and box edges together; for reflexive
# factors it coincides with the categorical product.
s, _ = sc.strong_product(F("K3l"), F("K3l"))
c, _ = sc.categorical_product(F("K3l"), F("K3l"))
print("\nstrong == categorical on reflexive factors:", s == c)
