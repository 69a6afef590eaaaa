"""Exact pursuit-game solving on finite graphs with loops.

The package computes cop numbers and optimal strategies for the classic,
fully-active and sneaky-active variants by exhaustive backward induction,
provides the fold/dismantling machinery under which the sneaky-active cop
number is invariant, and builds the categorical, box and strong graph
products whose cop numbers the verification harness checks.
"""

from .errors import (
    BudgetExceededError,
    CapExceededError,
    GraphError,
    InvalidSpecError,
    InvalidUnfoldError,
    IsolatedVertexError,
    NotFoldableError,
    NotWinningError,
    OutOfRangeError,
    ParseError,
    SizeLimitExceededError,
    SolverError,
)
from .families import FamilySpec, from_shorthand, generate
from .graphs import (
    Bipartition,
    Component,
    Graph,
    bipartition,
    build,
    components,
    dumps,
    dumps_json,
    fingerprint,
    induced_subgraph,
    is_connected,
    isomorphic,
    loads,
)
from .homotopy import (
    EquivalenceCertificate,
    FoldSequence,
    FoldStep,
    dismantle,
    fold,
    foldable_pairs,
    homotopy_equivalent,
    is_stiff,
    random_perturbation,
    unfold,
)
from .products import (
    ProductVertexMap,
    box_product,
    categorical_product,
    iterated_box,
    strong_product,
)
from .solver import (
    EvadingRobber,
    GameState,
    RandomRobber,
    SolveOutcome,
    Strategy,
    Trace,
    Variant,
    WinTable,
    cop_number,
    extract_strategy,
    joint_cop_moves,
    legal_moves,
    simulate_trace,
    solve_win_table,
    winning_placements,
)

__version__ = "0.1.0"
