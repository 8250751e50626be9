"""Pure-Python n-tuple value network: lookup, softmax policy, TD updates."""

import math

import numpy as np

IDENTITY, TANH = 0, 1
REWARD_TERMINAL, REWARD_STEP_COST = 0, 1

TRACE_FLOOR = 1e-9


class Net:
    """A set of n-tuples over board cells plus one flat weight table.

    The value of a board is ``sigma(sum of one weight per tuple)`` where each
    tuple picks its weight by reading its cells as a mixed-radix number.
    Per-weight counters (sum / absolute sum of update signals) drive the
    temporal-coherence learning rate and the touched bitmap feeds the
    active-weight statistic.
    """

    def __init__(self, m_vector, tuples, transfer=TANH, gamma=1.0,
                 reward_mode=REWARD_TERMINAL):
        self.m_vector = tuple(int(m) for m in m_vector)
        self.tuples = [list(map(int, t)) for t in tuples]
        self.transfer = transfer
        self.gamma = float(gamma)
        self.reward_mode = reward_mode
        offsets = []
        strides = []
        total = 0
        for t in self.tuples:
            offsets.append(total)
            st = []
            size = 1
            for cell in t:
                st.append(size)
                size *= self.m_vector[cell]
            strides.append(st)
            total += size
        self.offsets = offsets
        self.strides = strides
        self.n_weights = total
        self.theta = np.zeros(total, dtype=np.float64)
        self.tcl_n = np.zeros(total, dtype=np.float64)
        self.tcl_a = np.zeros(total, dtype=np.float64)
        self.touched = np.zeros(total, dtype=np.uint8)

    # -- evaluation ------------------------------------------------------
    def active_indices(self, board):
        """Absolute weight index of each tuple for this board vector."""
        out = []
        for t, off, st in zip(self.tuples, self.offsets, self.strides):
            idx = off
            for cell, stride in zip(t, st):
                idx += board[cell] * stride
            out.append(idx)
        return out

    def raw_sum(self, board):
        theta = self.theta
        s = 0.0
        for t, off, st in zip(self.tuples, self.offsets, self.strides):
            idx = off
            for cell, stride in zip(t, st):
                idx += board[cell] * stride
            s += theta[idx]
        return float(s)

    def squash(self, raw):
        return math.tanh(raw) if self.transfer == TANH else raw

    def value(self, board):
        return self.squash(self.raw_sum(board))

    def grad_scale(self, value):
        """d sigma / d raw at the given squashed value."""
        return 1.0 - value * value if self.transfer == TANH else 1.0

    # -- updates -----------------------------------------------------------
    def apply_update(self, traces, delta, alpha, tcl=True, tcl_exp=False, beta=2.7):
        """One TD update: theta[i] += alpha * rate_i * delta * e_i.

        The coherence counters accumulate the pre-rate signal delta * e_i;
        a weight with no history (A == 0) learns at the full rate.
        """
        if delta == 0.0:
            return
        theta = self.theta
        tn = self.tcl_n
        ta = self.tcl_a
        touched = self.touched
        for w, e in zip(traces.idx, traces.val):
            raw = delta * e
            if raw == 0.0:
                continue
            if tcl:
                a_acc = ta[w]
                if a_acc == 0.0:
                    rate = 1.0
                else:
                    x = abs(tn[w]) / a_acc
                    rate = math.exp(beta * (x - 1.0)) if tcl_exp else x
            else:
                rate = 1.0
            theta[w] += alpha * rate * raw
            tn[w] += raw
            ta[w] += abs(raw)
            touched[w] = 1


class Traces:
    """Sparse eligibility traces as parallel index/value lists.

    Duplicate indices are allowed (gradients are all positive, so the
    bookkeeping is unaffected); entries decayed below the floor are dropped.
    """

    __slots__ = ("idx", "val")

    def __init__(self):
        self.idx = []
        self.val = []

    def clear(self):
        self.idx.clear()
        self.val.clear()

    def decay(self, factor):
        if factor == 0.0 or not self.idx:
            self.clear()
            return
        nidx, nval = [], []
        for w, e in zip(self.idx, self.val):
            e *= factor
            if abs(e) >= TRACE_FLOOR:
                nidx.append(w)
                nval.append(e)
        self.idx, self.val = nidx, nval

    def accumulate(self, indices, scale):
        self.idx.extend(indices)
        self.val.extend([scale] * len(indices))

    def __len__(self):
        return len(self.idx)

    def entries(self):
        return list(self.idx), list(self.val)


# -- glue between a game and a net --------------------------------------

def move_targets(game, net, state):
    """Legal actions with the value target of each afterstate.

    Mid-game the target is ``step_reward + gamma * V(afterstate)``; a
    terminal afterstate contributes its true score to the acting player and
    bootstraps nothing.
    """
    acts = game.legal_actions(state)
    mover = game.current_player(state)
    step_r = -1.0 if net.reward_mode == REWARD_STEP_COST else 0.0
    targets = []
    for a in acts:
        s2 = game.apply(state, a)
        if game.is_terminal(s2):
            t = step_r if net.reward_mode == REWARD_STEP_COST else game.score(s2, mover)
        else:
            t = step_r + net.gamma * net.value(game.board_vector(s2))
        targets.append(t)
    return acts, targets


def softmax(values):
    hi = max(values)
    exps = [math.exp(v - hi) for v in values]
    z = sum(exps)
    return [e / z for e in exps]


def priors(game, net, state):
    acts, targets = move_targets(game, net, state)
    return acts, softmax(targets)


def greedy_action(game, net, state):
    acts, targets = move_targets(game, net, state)
    best = 0
    for i in range(1, len(acts)):
        if targets[i] > targets[best]:
            best = i
    return acts[best]


def state_value_mover(game, net, state):
    """Net value of a state from the side-to-move's perspective.

    The table is trained on afterstates, i.e. from the viewpoint of the
    player who just created the state, so two-player games flip the sign.
    """
    v = net.value(game.board_vector(state))
    return -v if game.n_players == 2 else v
