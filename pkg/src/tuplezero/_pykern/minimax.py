"""Depth-bounded alpha-beta (negamax) with a transposition table.

Exact on TicTacToe at full depth; on bigger games the horizon value is a
neutral 0, so results there are "oracle at depth d", not perfect play.
"""

import math

from .. import _tables as T
from ..errors import GameContractError

EXACT, LOWER, UPPER = 0, 1, 2

_C4_RANK = {c: i for i, c in enumerate((3, 2, 4, 1, 5, 0, 6))}


class AlphaBeta:
    def __init__(self, game, max_depth):
        if game.n_players != 2:
            raise GameContractError("alpha-beta needs a 2-player game")
        self.game = game
        self.max_depth = max_depth
        self.tt = {}

    def clear(self):
        self.tt.clear()

    def _order(self, acts):
        if self.game.gid == T.CONNECT4:
            return sorted(acts, key=_C4_RANK.__getitem__)
        return acts

    def _search(self, state, depth, alpha, beta):
        """Value of `state` for its side to move."""
        game = self.game
        if game.is_terminal(state):
            return game.score(state, game.current_player(state))
        if depth <= 0:
            return 0.0
        key = game.state_key(state)
        hit = self.tt.get(key)
        if hit is not None and hit[0] >= depth:
            _, flag, v = hit
            if flag == EXACT:
                return v
            if flag == LOWER and v >= beta:
                return v
            if flag == UPPER and v <= alpha:
                return v
        alpha0 = alpha
        best = -math.inf
        for a in self._order(game.legal_actions(state)):
            v = -self._search(game.apply(state, a), depth - 1, -beta, -alpha)
            if v > best:
                best = v
            if best > alpha:
                alpha = best
            if alpha >= beta:
                break
        if best <= alpha0:
            flag = UPPER
        elif best >= beta:
            flag = LOWER
        else:
            flag = EXACT
        self.tt[key] = (depth, flag, best)
        return best

    def value(self, state):
        return self._search(state, self.max_depth, -2.0, 2.0)

    def best_action(self, state, rng=None):
        """Best move for the side to move; `rng` picks uniformly among
        equally good moves, otherwise the lowest action id wins."""
        game = self.game
        acts = game.legal_actions(state)
        vals = []
        for a in acts:
            vals.append(-self._search(game.apply(state, a), self.max_depth - 1,
                                      -2.0, 2.0))
        best = max(vals)
        ties = [a for a, v in zip(acts, vals) if v == best]
        if rng is not None and len(ties) > 1:
            return ties[rng.randint(len(ties))]
        return ties[0]
