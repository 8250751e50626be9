"""N-tuple value systems: random-walk generation and the public surface
over the kernel network (evaluation, softmax priors, TD updates)."""

import math
from dataclasses import dataclass

from .errors import ConfigError
from .rng import SplitMix64

TRANSFERS = {"identity": 0, "tanh": 1}
REWARD_MODES = {"terminal": 0, "step_cost": 1}

WALK_RETRIES = 200


@dataclass(frozen=True)
class NTupleDef:
    """An ordered tuple of board cells; the first cell is the least
    significant digit of the lookup index."""

    cells: tuple

    def __len__(self):
        return len(self.cells)


def random_walk_tuples(spec, n, k, rng):
    """Draw k n-tuples by random walk over the board adjacency.

    Each new cell is adjacent to at least one already-placed cell and cells
    never repeat within a tuple.  A walk that runs into a dead end is
    retried from a fresh start cell.
    """
    if n < 1 or k < 1:
        raise ConfigError("tuple length and count must be >= 1")
    if n > spec.cell_count:
        raise ConfigError(f"cannot place {n} distinct cells on {spec.cell_count}")
    adjacency = spec.adjacency
    out = []
    for _ in range(k):
        for attempt in range(WALK_RETRIES):
            cells = [rng.randint(spec.cell_count)]
            chosen = set(cells)
            while len(cells) < n:
                frontier = sorted(
                    {c for cell in cells for c in adjacency[cell]} - chosen
                )
                if not frontier:
                    break
                nxt = frontier[rng.randint(len(frontier))]
                cells.append(nxt)
                chosen.add(nxt)
            if len(cells) == n:
                out.append(NTupleDef(tuple(cells)))
                break
        else:
            raise ConfigError(f"random walk failed {WALK_RETRIES} times")
    return out


class NTupleSystem:
    """k n-tuples over one game's board plus the flat weight table.

    ``transfer`` squashes the summed weights ("tanh" for two-player games,
    "identity" for the cube's unbounded cost-to-go).  ``gamma`` and
    ``reward_mode`` define the afterstate target semantics the table was
    trained under, so they travel with the weights.
    """

    def __init__(self, game, defs, transfer="tanh", gamma=1.0,
                 reward_mode="terminal"):
        if transfer not in TRANSFERS:
            raise ConfigError(f"unknown transfer {transfer!r}")
        if reward_mode not in REWARD_MODES:
            raise ConfigError(f"unknown reward mode {reward_mode!r}")
        self.game = game
        self.defs = [d if isinstance(d, NTupleDef) else NTupleDef(tuple(d)) for d in defs]
        self.transfer = transfer
        self.reward_mode = reward_mode
        self._backend = game.backend
        self.net = self._backend.Net(
            game.spec.position_values,
            [d.cells for d in self.defs],
            transfer=TRANSFERS[transfer],
            gamma=gamma,
            reward_mode=REWARD_MODES[reward_mode],
        )

    @classmethod
    def from_random_walk(cls, game, n, k, seed, **kw):
        rng = seed if isinstance(seed, SplitMix64) else SplitMix64(seed)
        defs = random_walk_tuples(game.spec, n, k, rng)
        return cls(game, defs, **kw)

    # -- evaluation ------------------------------------------------------
    @property
    def n_weights(self):
        return self.net.n_weights

    @property
    def gamma(self):
        return self.net.gamma

    @property
    def theta(self):
        return self.net.theta

    def value(self, state):
        """V(state) = transfer(sum of the k indexed weights)."""
        return self.net.value(self.game.cell_values(state))

    def active_indices(self, state):
        return self.net.active_indices(self.game.cell_values(state))

    def afterstate_targets(self, state):
        """(actions, target value per afterstate) for the side to move."""
        return self._backend.move_targets(self.game.kernel, self.net, state)

    def priors(self, state):
        """Softmax policy over the afterstate targets."""
        return self._backend.priors(self.game.kernel, self.net, state)

    def greedy_action(self, state):
        return self._backend.greedy_action(self.game.kernel, self.net, state)

    # -- training support ------------------------------------------------
    def new_traces(self):
        return self._backend.Traces()

    def apply_update(self, traces, delta, alpha, tcl=True, tcl_transfer="identity",
                     tcl_beta=2.7):
        """theta[i] += alpha * rate_i * delta * e_i over the trace entries,
        then accumulate the coherence counters with the pre-rate signal."""
        self.net.apply_update(traces, delta, alpha, tcl=tcl,
                              tcl_exp=(tcl_transfer == "exponential"),
                              beta=tcl_beta)

    def active_weight_stats(self):
        """(touched weight count, fraction of the table ever updated)."""
        touched = int(self.net.touched.sum())
        return touched, touched / self.net.n_weights

    def __repr__(self):
        k = len(self.defs)
        ns = sorted({len(d) for d in self.defs})
        return (f"NTupleSystem({self.game.name}, k={k}, n={ns}, "
                f"weights={self.n_weights}, transfer={self.transfer})")


def tcl_rate(n_acc, a_acc, transfer="identity", beta=2.7):
    """Per-weight learning-rate factor of temporal coherence learning.

    A weight with no history learns at the full rate; consistent update
    signs keep |N|/A at 1, alternating signs drive it toward 0.
    """
    if a_acc < 0:
        raise ValueError("absolute accumulator cannot be negative")
    if a_acc == 0:
        return 1.0
    x = abs(n_acc) / a_acc
    if transfer == "exponential":
        return math.exp(beta * (x - 1.0))
    return x
