"""The three pursuit variants and what changes between them.

Classic: pieces may stay or move; any cop/robber co-location after a move
is a capture.  Fully-active: every piece must move every turn (a loop is
the only way to stay).  Sneaky-active: must-move as well, but capture
happens ONLY when a cop moves onto the robber; the robber may step onto a
cop and sneak by.
"""

import sneakycops as sc
from sneakycops import GameState, Variant

p5 = sc.from_shorthand("P5")

# Move rules: from the middle of an unlooped path, the classic variant may
# stay; the active variants must step off.
print("classic moves from P5 vertex 2:", sorted(sc.legal_moves(p5, 2, Variant.CLASSIC)))
print("sneaky  moves from P5 vertex 2:", sorted(sc.legal_moves(p5, 2, Variant.SNEAKY_ACTIVE)))

# One sneaky-active cop on a path is hopeless: the robber starts on the cop
# and shadows every move.  The win table shows those shadow states are not
# cop-winnable.
table = sc.solve_win_table(p5, 1, Variant.SNEAKY_ACTIVE)
print("\nshadow states ({v}, v) cop-winnable:",
      [table.is_cop_win(GameState((v,), v)) for v in range(5)])
print("one-cop winning placements:",
      sc.winning_placements(p5, 1, Variant.SNEAKY_ACTIVE, table))

# Two cops suffice: place them adjacent, chase down the robber.
out = sc.cop_number(p5, Variant.SNEAKY_ACTIVE)
print(f"\nsneaky-active cop number of P5: {out.cop_number}, "
      f"witness placement {out.placement}, worst-case capture in "
      f"{out.max_rank} cop moves")

# The same graph across variants: the sneaky capture rule costs the cops.
for g_token in ["P5", "C4", "C6", "K5_2"]:
    g = sc.from_shorthand(g_token)
    numbers = {v.value: sc.cop_number(g, v).cop_number for v in Variant}
    print(g_token, numbers)

# On reflexive graphs the sneaky-active game IS the classic game: the loop
# lets a cop stand on the robber's square and capture on the spot.
i4l = sc.from_shorthand("I4l")
print("\nreflexive looped path:",
      {v.value: sc.cop_number(i4l, v).cop_number for v in Variant})

# Disconnected graphs decompose: the robber commits to one component.
c3 = sc.from_shorthand("C3")
union = sc.build(6, list(c3.edges()) + [(u + 3, v + 3) for u, v in c3.edges()])
out = sc.cop_number(union, Variant.SNEAKY_ACTIVE)
print("two disjoint triangles:", out.cop_number, "=",
      "+".join(str(c.outcome.cop_number) for c in out.component_outcomes))
