"""Graph families: generation, text format, structural analysis.

Every graph in this package is a finite undirected graph where loops are
allowed but isolated vertices are not.  Neighborhoods are loop-inclusive:
a vertex is its own neighbor exactly when it carries a loop, which is also
what lets a piece "stay put" in the must-move game variants.
"""

import sneakycops as sc

# Shorthand covers the families used throughout: cycles, paths, complete
# graphs (add an 'l' suffix for the looped versions), Kneser graphs K<n>_<m>,
# hypercubes Q<d>, the looped single vertex T, and looped paths I<n>l.
for token in ["C5", "C4l", "P4", "K4", "K5_2", "Q3", "T", "I4l"]:
    g = sc.from_shorthand(token)
    degrees = sorted({g.degree(v) for v in range(g.n)})
    print(f"{token:>5}: n={g.n:3d} edges={g.edge_count():3d} "
          f"degrees={degrees} reflexive={g.is_reflexive()}")

# K(5,2) is the Petersen graph: 2-element subsets of a 5-set, adjacent when
# disjoint, in lexicographic vertex order.
petersen = sc.generate(sc.FamilySpec("kneser", (5, 2)))
print("\nPetersen:", petersen.n, "vertices,", petersen.edge_count(), "edges")

# The text format round-trips: a header line then one edge per line.
text = sc.dumps(sc.from_shorthand("C4"))
print("\nserialized C4:")
print(text)
assert sc.loads(text) == sc.from_shorthand("C4")

# Bipartition analysis: loops count as odd closed walks, so any loop (or odd
# cycle) invalidates the 2-coloring.
for token in ["C4", "C5", "Q3", "T"]:
    b = sc.bipartition(sc.from_shorthand(token))
    sides = (len(b.side(0)), len(b.side(1))) if b.valid else None
    print(f"bipartition({token}): valid={b.valid} sides={sides}")

# Components of a disjoint union, with relabeling maps back to the parent.
c3 = sc.from_shorthand("C3")
union = sc.build(6, list(c3.edges()) + [(u + 3, v + 3) for u, v in c3.edges()])
for comp in sc.components(union):
    print("component", comp.vertices, "->", comp.graph)

# Exhaustive isomorphism testing backs the product and folding machinery.
q3 = sc.from_shorthand("Q3")
box, _ = sc.box_product(sc.from_shorthand("K2"), sc.from_shorthand("C4"))
print("\nK2 box C4 isomorphic to Q3:", sc.isomorphic(box, q3) is not None)
