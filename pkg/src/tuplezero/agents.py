"""Agents: everything that can sit on one side of a match.

An agent exposes ``propose(state) -> action`` plus a ``deterministic``
flag (deterministic pairs replay identically, which matters for match
statistics) and a ``reset()`` called between episodes.
"""

import json

from .mcts import MctsSearch, SearchConfig
from .rng import SplitMix64


class Agent:
    name = "agent"
    deterministic = False

    def propose(self, state):
        raise NotImplementedError

    def reset(self):
        pass

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class RandomAgent(Agent):
    def __init__(self, game, seed=0):
        self.game = game
        self.rng = SplitMix64(seed)
        self.name = "random"

    def propose(self, state):
        acts = self.game.legal_actions(state)
        return acts[self.rng.randint(len(acts))]


class TclBaseAgent(Agent):
    """Greedy over afterstate targets, lowest action id on ties."""

    deterministic = True

    def __init__(self, system, name="tcl-base"):
        self.system = system
        self.game = system.game
        self.name = name

    def propose(self, state):
        return self.system.greedy_action(state)


class TclWrapAgent(Agent):
    """The trained net wrapped by the PUCT search at decision time.

    The tree is kept across this agent's own consecutive moves within one
    episode and dropped on reset().  If the search never visited a root
    child (tiny budgets), the prior argmax decides.
    """

    deterministic = True

    def __init__(self, system, cfg=None, name=None, dump_path=None):
        self.system = system
        self.game = system.game
        self.cfg = cfg or SearchConfig()
        self.search = MctsSearch(self.game, system=system, cfg=self.cfg)
        self.name = name or f"tcl-wrap[{self.cfg.iterations}]"
        self._dump_fh = open(dump_path, "a") if dump_path else None
        self._move_no = 0

    def propose(self, state):
        res = self.search.run(state)
        self._move_no += 1
        if self._dump_fh is not None:
            edges = [
                {"action": a, "n": n, "q": q, "p": p}
                for a, n, q, p in zip(res.actions, res.visits, res.means, res.priors)
            ]
            self._dump_fh.write(json.dumps({
                "move": self._move_no,
                "state_key": f"{self.game.state_key(state):016x}",
                "chosen": res.action,
                "iterations": res.iterations,
                "edges": edges,
            }) + "\n")
            self._dump_fh.flush()
        return res.action

    def reset(self):
        self.search.reset()
        self._move_no = 0

    def close(self):
        if self._dump_fh is not None:
            self._dump_fh.close()
            self._dump_fh = None


class MctsUctAgent(Agent):
    """Plain UCT with uniform-random playouts (no learned knowledge)."""

    def __init__(self, game, iterations=10000, tree_depth=40, seed=0,
                 name=None):
        self.game = game
        self.iterations = iterations
        self.tree_depth = tree_depth
        self.rng = SplitMix64(seed)
        self.name = name or f"mcts-uct[{iterations}]"

    def propose(self, state):
        return self.game.backend.uct_search(
            self.game.kernel, state, self.iterations, self.tree_depth, self.rng)


class MinimaxAgent(Agent):
    """Depth-bounded alpha-beta oracle.

    Exact for TicTacToe at depth >= 9.  With an rng it mixes uniformly over
    equally good moves, which turns it into a family of optimal opponents
    instead of one fixed line.
    """

    def __init__(self, game, depth, seed=None, name=None):
        self.game = game
        self.depth = depth
        self.rng = SplitMix64(seed) if seed is not None else None
        self.deterministic = seed is None
        self._ab = game.backend.AlphaBeta(game.kernel, depth)
        self.name = name or f"alphabeta[{depth}]"

    def propose(self, state):
        return self._ab.best_action(state, self.rng)

    def value(self, state):
        return self._ab.value(state)


class FnAgent(Agent):
    """Wrap a plain function (used by tests and the play CLI)."""

    def __init__(self, fn, name="fn"):
        self._fn = fn
        self.name = name

    def propose(self, state):
        return self._fn(state)
