"""Test-time planning: the PUCT wrapper search and the plain-UCT baseline.

Selection follows the predictor-UCB rule

    argmax_a  W(s,a)/N(s,a) + c_puct * P(s,a) * sqrt(eps + sum_b N(s,b)) / (1 + N(s,a))

with unvisited edges contributing 0 for the mean term, so a fresh node's
argmax is decided by the priors alone.  Values are backed up with a sign
flip per ply in two-player games and unchanged in one-player puzzles.
"""

from dataclasses import dataclass, field, replace



@dataclass(frozen=True)
class SearchConfig:
    iterations: int = 1000
    c_puct: float = 1.0
    epsilon_uct: float = 1e-8
    max_depth: int = 0          # 0 = unlimited
    reuse_tree: bool = True

    def __post_init__(self):
        if self.iterations < 1:
            raise ValueError("need at least one iteration")
        if self.c_puct <= 0 or self.epsilon_uct <= 0:
            raise ValueError("c_puct and epsilon_uct must be positive")


@dataclass
class SearchResult:
    action: int
    actions: list
    visits: list
    means: list              # W/N per root edge, 0 where unvisited
    priors: list
    iterations: int
    nodes: int

    @property
    def visit_total(self):
        return sum(self.visits)


class MctsSearch:
    """One search tree over one approximator.

    Pass either a trained ``NTupleSystem`` or a callable
    ``approx(state, actions) -> (value_for_side_to_move, prior_list)`` for
    hand-crafted approximators in tests.  With ``reuse_tree`` the subtree
    under the realized move carries over to the next call.
    """

    def __init__(self, game, system=None, approx=None, cfg=None):
        self.game = game
        self.cfg = cfg or SearchConfig()
        backend = system._backend if system is not None else game.backend
        self._k = backend.Search(
            game.kernel,
            net=system.net if system is not None else None,
            approx=approx,
            cpuct=self.cfg.c_puct,
            eps_uct=self.cfg.epsilon_uct,
            max_depth=self.cfg.max_depth,
            reuse=self.cfg.reuse_tree,
        )

    def run(self, state, iterations=None):
        out = self._k.run(state, iterations or self.cfg.iterations)
        return SearchResult(**out)

    def reset(self):
        self._k.reset()

    def debug_tree(self, max_nodes=100000):
        return self._k.debug_tree(max_nodes)

    @property
    def node_count(self):
        return self._k.n_nodes


def plain_uct_search(game, state, iterations, tree_depth, rng):
    """Classic UCT with uniform-random playouts; the tournament baseline."""
    return game.backend.uct_search(game.kernel, state, iterations, tree_depth, rng)


def search_config(**kw):
    return replace(SearchConfig(), **kw)
