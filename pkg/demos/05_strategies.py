"""Optimal play from the win table: strategies, traces, evasion.

The win table ranks every cop-winnable state by the number of cop moves
needed to force capture.  The extracted cop strategy always moves to
decrease that rank; the robber policy survives forever whenever the state
is outside the winning set, and otherwise stalls as long as possible.
"""

import sneakycops as sc
from sneakycops import EvadingRobber, GameState, RandomRobber, Variant

SNEAKY = Variant.SNEAKY_ACTIVE

c6 = sc.from_shorthand("C6")
out = sc.cop_number(c6, SNEAKY)
table = out.table
print(f"C6: cop number {out.cop_number}, placement {out.placement}, "
      f"worst start needs {out.max_rank} cop moves")

# Play out the worst case against the stalling robber.
trace = sc.simulate_trace(c6, SNEAKY, out.placement, EvadingRobber(table),
                          max_turns=60, table=table)
for t in trace.turns:
    tag = "  <- capture" if t.capture else ""
    print(f"  ply {t.ply:2d} {t.mover:>6}: cops={list(t.cops)} robber={t.robber}{tag}")
print(f"captured in {trace.cop_turns} cop moves "
      f"(promised at most {table.rank(GameState(out.placement, trace.turns[0].robber))})")

# Random robbers are caught at least as fast.
caught = [sc.simulate_trace(c6, SNEAKY, out.placement, RandomRobber(s),
                            60, table=table).cop_turns for s in range(5)]
print("random robbers captured in cop moves:", caught)

# One fewer cop and the tables turn: the evader survives indefinitely.
low = sc.solve_win_table(c6, out.cop_number - 1, SNEAKY)
trace = sc.simulate_trace(c6, SNEAKY, (0, 1, 2), EvadingRobber(low),
                          max_turns=10 * c6.n, table=low)
print(f"\nwith {out.cop_number - 1} cops: captured={trace.captured} "
      f"after {len(trace.turns) - 1} plies")

# The signature sneaky move: the robber steps onto a cop unharmed.
p5 = sc.from_shorthand("P5")
t1 = sc.solve_win_table(p5, 1, SNEAKY)
trace = sc.simulate_trace(p5, SNEAKY, (2,), EvadingRobber(t1), 8, table=t1)
for t in trace.turns:
    overlap = t.robber in t.cops
    print(f"  ply {t.ply} {t.mover:>6}: cop={list(t.cops)} robber={t.robber}"
          + ("   (sharing a vertex, no capture)" if overlap else ""))
