"""Pure-Python kernel backend.

Slow but dependency-free reference implementation of the hot operations.
The compiled kernel (``tuplezero._ckern``) exposes exactly this surface;
``tuplezero.backend`` picks whichever is available.
"""

from ..rng import SplitMix64 as Rng
from .cubebfs import cube_bfs_counts, cube_index
from .games import make_game
from .minimax import AlphaBeta
from .net import (
    IDENTITY,
    REWARD_STEP_COST,
    REWARD_TERMINAL,
    TANH,
    TRACE_FLOOR,
    Net,
    Traces,
    greedy_action,
    move_targets,
    priors,
    softmax,
    state_value_mover,
)
from .search import Search, uct_search
from .train import Trainer

BACKEND = "python"

__all__ = [
    "AlphaBeta", "BACKEND", "IDENTITY", "Net", "REWARD_STEP_COST",
    "REWARD_TERMINAL", "Rng", "Search", "TANH", "TRACE_FLOOR", "Traces",
    "Trainer", "cube_bfs_counts", "cube_index", "greedy_action", "make_game",
    "move_targets", "priors", "softmax", "state_value_mover", "uct_search",
]
