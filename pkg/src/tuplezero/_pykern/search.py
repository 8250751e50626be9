"""Pure-Python tree search: PUCT wrapper search and a plain UCT baseline."""

import math

from ..errors import GameContractError
from .net import priors, softmax, state_value_mover


class _Node:
    __slots__ = ("state", "key", "terminal", "score_mover", "expanded",
                 "acts", "kids", "W", "N", "P")

    def __init__(self, game, state):
        self.state = state
        self.key = game.state_key(state)
        self.terminal = game.is_terminal(state)
        self.score_mover = (
            game.score(state, game.current_player(state)) if self.terminal else 0.0
        )
        self.expanded = False
        self.acts = None
        self.kids = None
        self.W = None
        self.N = None
        self.P = None


class Search:
    """PUCT tree search around a value/prior approximator.

    One instance owns one tree.  With ``reuse`` enabled, consecutive calls
    look the new root up by state key and keep its subtree statistics.
    The approximator is either an n-tuple net or a callable
    ``f(state, actions) -> (value_for_mover, prior_list)``.
    """

    def __init__(self, game, net=None, approx=None, cpuct=1.0, eps_uct=1e-8,
                 max_depth=0, reuse=True):
        if (net is None) == (approx is None):
            raise ValueError("pass exactly one of net / approx")
        self.game = game
        self.net = net
        self.approx = approx
        self.cpuct = cpuct
        self.eps_uct = eps_uct
        self.max_depth = max_depth
        self.reuse = reuse
        self.kappa = -1.0 if game.n_players == 2 else 1.0
        self.reset()

    def reset(self):
        self._by_key = {}
        self.n_nodes = 0
        self.root = None

    # -- node plumbing ---------------------------------------------------
    def _new_node(self, state):
        node = _Node(self.game, state)
        self.n_nodes += 1
        self._by_key.setdefault(node.key, node)
        return node

    def _evaluate(self, node):
        if self.net is not None:
            acts, pri = priors(self.game, self.net, node.state)
            v = state_value_mover(self.game, self.net, node.state)
        else:
            acts = self.game.legal_actions(node.state)
            v, pri = self.approx(node.state, acts)
        return acts, v, pri

    def _expand(self, node):
        acts, v, pri = self._evaluate(node)
        node.acts = acts
        node.P = list(pri)
        node.kids = [None] * len(acts)
        node.W = [0.0] * len(acts)
        node.N = [0] * len(acts)
        node.expanded = True
        return v

    def _select(self, node):
        total = 0
        for n in node.N:
            total += n
        bonus = self.cpuct * math.sqrt(self.eps_uct + total)
        best, best_score = 0, -math.inf
        for e in range(len(node.acts)):
            n = node.N[e]
            q = node.W[e] / n if n > 0 else 0.0
            score = q + bonus * node.P[e] / (1 + n)
            if score > best_score:
                best, best_score = e, score
        return best

    def _iterate(self, node, depth):
        """One search iteration; returns the value for the player who moved
        into `node` (sign handled by kappa at every level)."""
        if node.terminal:
            return self.kappa * node.score_mover
        if not node.expanded:
            return self.kappa * self._expand(node)
        if self.max_depth and depth >= self.max_depth:
            _, v, _ = self._evaluate(node)
            return self.kappa * v
        e = self._select(node)
        child = node.kids[e]
        if child is None:
            child = self._new_node(self.game.apply(node.state, node.acts[e]))
            node.kids[e] = child
        v_child = self._iterate(child, depth + 1)
        node.W[e] += v_child
        node.N[e] += 1
        return self.kappa * v_child

    # -- public ------------------------------------------------------------
    def run(self, state, iterations):
        if self.game.is_terminal(state):
            raise GameContractError("search from a terminal state")
        root = None
        if self.reuse:
            cand = self._by_key.get(self.game.state_key(state))
            if cand is not None and cand.state == state:
                root = cand
        else:
            self.reset()
        if root is None:
            root = self._new_node(state)
        self.root = root
        for _ in range(iterations):
            self._iterate(root, 0)
        return self._result(root, iterations)

    def _result(self, root, iterations):
        if not root.expanded:  # can only happen with iterations == 0
            acts, _, pri = self._evaluate(root)
            visits = [0] * len(acts)
            ws = [0.0] * len(acts)
            ps = list(pri)
        else:
            acts, visits, ws, ps = root.acts, root.N, root.W, root.P
        total = sum(visits)
        if total > 0:
            best = 0
            for i in range(1, len(acts)):
                if visits[i] > visits[best]:
                    best = i
        else:
            best = 0  # no child was ever visited: fall back to the prior
            for i in range(1, len(acts)):
                if ps[i] > ps[best]:
                    best = i
        means = [ws[i] / visits[i] if visits[i] else 0.0 for i in range(len(acts))]
        return {
            "action": acts[best],
            "actions": list(acts),
            "visits": list(visits),
            "means": means,
            "priors": list(ps),
            "iterations": iterations,
            "nodes": self.n_nodes,
        }

    def debug_tree(self, max_nodes=100000):
        """Plain-dict dump of the current tree for invariant checks."""

        def walk(node, budget):
            d = {
                "key": node.key,
                "terminal": node.terminal,
                "expanded": node.expanded,
            }
            if node.expanded:
                d["actions"] = list(node.acts)
                d["N"] = list(node.N)
                d["W"] = list(node.W)
                d["P"] = list(node.P)
                kids = []
                for k in node.kids:
                    if k is None or budget[0] <= 0:
                        kids.append(None)
                    else:
                        budget[0] -= 1
                        kids.append(walk(k, budget))
                d["children"] = kids
            return d

        if self.root is None:
            return None
        return walk(self.root, [max_nodes])


class _UctNode:
    __slots__ = ("state", "terminal", "score_mover", "acts", "untried",
                 "kids", "W", "N")

    def __init__(self, game, state):
        self.state = state
        self.terminal = game.is_terminal(state)
        self.score_mover = (
            game.score(state, game.current_player(state)) if self.terminal else 0.0
        )
        if self.terminal:
            self.acts = []
        else:
            self.acts = game.legal_actions(state)
        self.untried = list(range(len(self.acts)))
        self.kids = [None] * len(self.acts)
        self.W = [0.0] * len(self.acts)
        self.N = [0] * len(self.acts)


UCB_C = math.sqrt(2.0)


def _playout(game, state, depth, depth_cap, rng):
    """Uniform-random continuation; value for the mover at `state`."""
    me = game.current_player(state)
    while True:
        if game.is_terminal(state):
            return game.score(state, me)
        if depth >= depth_cap:
            return 0.0
        acts = game.legal_actions(state)
        state = game.apply(state, acts[rng.randint(len(acts))])
        depth += 1


def uct_search(game, state, iterations, tree_depth, rng):
    """Classic UCT with random playouts; returns the most-visited root move.

    `tree_depth` caps the total simulated depth (tree walk plus playout).
    If no root edge was ever visited the move is drawn uniformly.
    """
    if game.is_terminal(state):
        raise GameContractError("search from a terminal state")
    kappa = -1.0 if game.n_players == 2 else 1.0
    root = _UctNode(game, state)
    for _ in range(iterations):
        node, depth, path = root, 0, []
        while (not node.terminal and not node.untried
               and depth < tree_depth and node.acts):
            total = sum(node.N)
            log_total = math.log(total)
            best, best_score = 0, -math.inf
            for e in range(len(node.acts)):
                n = node.N[e]
                score = node.W[e] / n + UCB_C * math.sqrt(log_total / n)
                if score > best_score:
                    best, best_score = e, score
            path.append((node, best))
            node = node.kids[best]
            depth += 1
        if not node.terminal and node.untried and depth < tree_depth:
            pick = rng.randint(len(node.untried))
            e = node.untried.pop(pick)
            child = _UctNode(game, game.apply(node.state, node.acts[e]))
            node.kids[e] = child
            path.append((node, e))
            node = child
            depth += 1
        v = _playout(game, node.state, depth, tree_depth, rng)
        ret = kappa * v
        for parent, e in reversed(path):
            parent.W[e] += ret
            parent.N[e] += 1
            ret = kappa * ret
    best, best_n = -1, -1
    for e in range(len(root.acts)):
        if root.N[e] > best_n:
            best, best_n = e, root.N[e]
    if best_n <= 0:
        return root.acts[rng.randint(len(root.acts))]
    return root.acts[best]
