"""Pure-Python self-play trainer: TD(lambda) afterstate updates with a
final adaptation step for the non-last players at episode end."""

from .. import _tables as T
from ..rng import SplitMix64
from .net import REWARD_STEP_COST, Traces, greedy_action, move_targets
from .search import Search


class Trainer:
    """Owns one net and one game and advances them by self-play episodes.

    `params` is any object with the attribute set produced by
    ``learning.TrainConfig`` (alpha, lam, eps_start, eps_end, episodes_total,
    tcl, tcl_exp, tcl_beta, inside_iters, inside_cpuct, inside_eps_uct,
    inside_max_depth, cube_pmax, episode_cap).  The epsilon schedule is
    linear in the episode index over the full budget.
    """

    def __init__(self, game, net, params, seed):
        self.game = game
        self.net = net
        self.p = params
        self.rng = SplitMix64(seed)
        self.episodes_done = 0
        self.update_count = 0
        self.farl_count = 0
        self.traces = [Traces() for _ in range(game.n_players)]
        self.record_moves = False
        self.last_moves = None
        self.search = None
        if params.inside_iters > 0:
            # fresh tree every move: weights move between decisions, so
            # carried-over statistics would be stale
            self.search = Search(
                game, net=net, cpuct=params.inside_cpuct,
                eps_uct=params.inside_eps_uct,
                max_depth=params.inside_max_depth, reuse=False,
            )

    def epsilon(self):
        p = self.p
        total = p.episodes_total
        if total <= 1:
            return p.eps_start
        f = min(1.0, self.episodes_done / (total - 1))
        return p.eps_start + (p.eps_end - p.eps_start) * f

    def run(self, episodes):
        for _ in range(episodes):
            self._episode()
        return {
            "episodes": self.episodes_done,
            "updates": self.update_count,
            "farl_updates": self.farl_count,
        }

    # -- one episode -------------------------------------------------------
    def _start_state(self):
        game, rng = self.game, self.rng
        if game.gid == T.CUBE2:
            depth = 1 + rng.randint(self.p.cube_pmax)
            return game.scramble(depth, rng)
        return game.initial_state()

    def _episode(self):
        game, net, rng, p = self.game, self.net, self.rng, self.p
        eps = self.epsilon()
        state = self._start_state()
        moves = [] if self.record_moves else None
        for tr in self.traces:
            tr.clear()
        last_after = [None] * game.n_players
        steps = 0
        while not game.is_terminal(state):
            mover = game.current_player(state)
            explore = eps > 0.0 and rng.random() < eps
            if explore:
                acts = game.legal_actions(state)
                a = acts[rng.randint(len(acts))]
            elif self.search is not None:
                a = self.search.run(state, p.inside_iters)["action"]
            else:
                a = greedy_action(game, net, state)
            after = game.apply(state, a)
            terminal = game.is_terminal(after)
            if last_after[mover] is not None:
                self._td_update(mover, last_after[mover], after, terminal)
            last_after[mover] = after
            steps += 1
            if moves is not None:
                moves.append(a)
            if terminal:
                for q in range(game.n_players):
                    if q != mover and last_after[q] is not None:
                        self._final_adaptation(q, last_after[q], after)
                break
            if explore:
                for tr in self.traces:
                    tr.clear()
            if p.episode_cap and steps >= p.episode_cap:
                break  # truncated without a terminal signal: no final reward
            state = after
        self.episodes_done += 1
        if moves is not None:
            self.last_moves = moves

    def _td_update(self, player, prev_after, new_after, terminal):
        game, net, p = self.game, self.net, self.p
        board_prev = game.board_vector(prev_after)
        v_prev = net.squash(net.raw_sum(board_prev))
        step_r = -1.0 if net.reward_mode == REWARD_STEP_COST else 0.0
        if terminal:
            if net.reward_mode == REWARD_STEP_COST:
                target = step_r
            else:
                target = game.score(new_after, player)
        else:
            target = step_r + net.gamma * net.value(game.board_vector(new_after))
        delta = target - v_prev
        tr = self.traces[player]
        tr.decay(net.gamma * p.lam)
        tr.accumulate(net.active_indices(board_prev), net.grad_scale(v_prev))
        net.apply_update(tr, delta, p.alpha, p.tcl, p.tcl_exp, p.tcl_beta)
        self.update_count += 1

    def _final_adaptation(self, player, after, terminal_state):
        game, net, p = self.game, self.net, self.p
        board = game.board_vector(after)
        v = net.squash(net.raw_sum(board))
        delta = game.score(terminal_state, player) - v
        tr = self.traces[player]
        tr.decay(net.gamma * p.lam)
        tr.accumulate(net.active_indices(board), net.grad_scale(v))
        net.apply_update(tr, delta, p.alpha, p.tcl, p.tcl_exp, p.tcl_beta)
        self.update_count += 1
        self.farl_count += 1
