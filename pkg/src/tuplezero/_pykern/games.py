"""Pure-Python game dynamics.

States are immutable ``bytes`` in the layouts documented in ``_tables``.
This is the reference implementation; the compiled kernel mirrors it
operation for operation.
"""

from .. import _tables as T
from ..errors import GameContractError, IllegalMoveError


class Game:
    """Forward model of one game over bytes states."""

    def __init__(self, gdef):
        self.gdef = gdef
        self.gid = gdef.gid
        self.name = gdef.name
        self.n_players = gdef.n_players
        self.state_size = gdef.state_size
        self.n_actions = gdef.n_actions
        self.cell_count = gdef.cell_count
        self._zob = [[int(v) for v in row] for row in gdef.zobrist]

    # -- surface shared by all games ------------------------------------
    def initial_state(self):
        return self.gdef.initial

    def state_key(self, s):
        key = 0
        zob = self._zob
        for i, b in enumerate(s):
            key ^= zob[i][b]
        return key

    def legal_actions(self, s):
        if self.is_terminal(s):
            raise GameContractError("legal_actions called on a terminal state")
        return self._legal(s)

    def apply(self, s, a):
        if self.is_terminal(s):
            raise IllegalMoveError(a, "game is over")
        return self._apply(s, a)

    def score(self, s, player):
        if not self.is_terminal(s):
            raise GameContractError("score is only defined for terminal states")
        if not 0 <= player < self.n_players:
            raise GameContractError(f"no player {player} in {self.name}")
        return self._score(s, player)

    def current_player(self, s):
        raise NotImplementedError

    def is_terminal(self, s):
        raise NotImplementedError

    def board_vector(self, s):
        raise NotImplementedError


class TicTacToe(Game):
    LINES = ((0, 1, 2), (3, 4, 5), (6, 7, 8), (0, 3, 6), (1, 4, 7), (2, 5, 8),
             (0, 4, 8), (2, 4, 6))

    def current_player(self, s):
        return s[9]

    def _winner(self, s):
        for a, b, c in self.LINES:
            v = s[a]
            if v and s[b] == v and s[c] == v:
                return v - 1
        return -1

    def is_terminal(self, s):
        return self._winner(s) >= 0 or 0 not in s[:9]

    def _legal(self, s):
        return [i for i in range(9) if s[i] == 0]

    def _apply(self, s, a):
        if not 0 <= a < 9 or s[a] != 0:
            raise IllegalMoveError(a, "cell is not empty")
        p = s[9]
        out = bytearray(s)
        out[a] = p + 1
        out[9] = 1 - p
        return bytes(out)

    def _score(self, s, player):
        w = self._winner(s)
        if w < 0:
            return 0.0
        return 1.0 if w == player else -1.0

    def board_vector(self, s):
        return s[:9]


class Connect4(Game):
    ORDER = (3, 2, 4, 1, 5, 0, 6)  # center-first, used by search move ordering

    def current_player(self, s):
        return s[42]

    def _winner(self, s):
        for a, b, c, d in T.CONNECT4_LINES:
            v = s[a]
            if v and s[b] == v and s[c] == v and s[d] == v:
                return v - 1
        return -1

    def is_terminal(self, s):
        return self._winner(s) >= 0 or 0 not in s[:42]

    def _legal(self, s):
        return [c for c in range(7) if s[35 + c] == 0]

    def _apply(self, s, a):
        if not 0 <= a < 7:
            raise IllegalMoveError(a, "no such column")
        row = -1
        for r in range(6):
            if s[r * 7 + a] == 0:
                row = r
                break
        if row < 0:
            raise IllegalMoveError(a, "column is full")
        p = s[42]
        out = bytearray(s)
        out[row * 7 + a] = p + 1
        out[42] = 1 - p
        return bytes(out)

    def _score(self, s, player):
        w = self._winner(s)
        if w < 0:
            return 0.0
        return 1.0 if w == player else -1.0

    def board_vector(self, s):
        bv = bytearray(s[:42])
        for c in range(7):
            for r in range(6):
                if bv[r * 7 + c] == 0:
                    bv[r * 7 + c] = 3  # lowest empty cell is playable next
                    break
        return bytes(bv)


class Othello(Game):
    PASS = T.OTHELLO_PASS

    def __init__(self, gdef):
        super().__init__(gdef)
        self._rays = [
            [
                [int(T.OTHELLO_RAY_CELLS[cell][d][k]) for k in range(T.OTHELLO_RAY_LEN[cell][d])]
                for d in range(8)
            ]
            for cell in range(64)
        ]

    def current_player(self, s):
        return s[64]

    def is_terminal(self, s):
        return s[65] >= 2 or 0 not in s[:64]

    def _flips(self, s, cell, me):
        """All opponent cells captured by playing `me` on `cell`."""
        opp = 3 - me
        flips = []
        for ray in self._rays[cell]:
            run = []
            for c in ray:
                v = s[c]
                if v == opp:
                    run.append(c)
                elif v == me:
                    flips.extend(run)
                    break
                else:
                    break
        return flips

    def _has_flip(self, s, cell, me):
        opp = 3 - me
        for ray in self._rays[cell]:
            seen_opp = False
            for c in ray:
                v = s[c]
                if v == opp:
                    seen_opp = True
                elif v == me:
                    if seen_opp:
                        return True
                    break
                else:
                    break
        return False

    def _legal(self, s):
        me = s[64] + 1
        acts = [c for c in range(64) if s[c] == 0 and self._has_flip(s, c, me)]
        return acts if acts else [self.PASS]

    def _apply(self, s, a):
        p = s[64]
        me = p + 1
        if a == self.PASS:
            if any(s[c] == 0 and self._has_flip(s, c, me) for c in range(64)):
                raise IllegalMoveError(a, "pass while placements exist")
            out = bytearray(s)
            out[64] = 1 - p
            out[65] = s[65] + 1
            return bytes(out)
        if not 0 <= a < 64 or s[a] != 0:
            raise IllegalMoveError(a, "cell is not empty")
        flips = self._flips(s, a, me)
        if not flips:
            raise IllegalMoveError(a, "move flips nothing")
        out = bytearray(s)
        out[a] = me
        for c in flips:
            out[c] = me
        out[64] = 1 - p
        out[65] = 0
        return bytes(out)

    def _score(self, s, player):
        mine = s[:64].count(player + 1)
        theirs = s[:64].count(2 - player)
        if mine > theirs:
            return 1.0
        if mine < theirs:
            return -1.0
        return 0.0

    def board_vector(self, s):
        return s[:64]


class Cube2(Game):
    """2x2x2 pocket cube with the DBL corner held in place.

    Twist ids: face (U=0, R=1, F=2) * 3 + quarter turns - 1, all nine
    counting as one move (half-turn metric).
    """

    FIXED = T.CUBE_FIXED_CORNER

    def __init__(self, gdef):
        super().__init__(gdef)
        self._src = T.CUBE_TWIST_SRC.tolist()
        self._ori = T.CUBE_TWIST_ORI.tolist()
        self._rank = T.CUBE_MOVABLE_RANK.tolist()
        self.solved = T.CUBE_SOLVED

    def current_player(self, s):
        return 0

    def is_terminal(self, s):
        return s == self.solved

    def _legal(self, s):
        return list(range(9))

    def _apply(self, s, a):
        if not 0 <= a < 9:
            raise IllegalMoveError(a, "no such twist")
        return self.twist(s, a)

    def twist(self, s, t):
        src = self._src[t]
        ori = self._ori[t]
        out = bytearray(16)
        for p in range(8):
            q = src[p]
            out[2 * p] = s[2 * q]
            out[2 * p + 1] = ori[p][s[2 * q + 1]]
        return bytes(out)

    def _score(self, s, player):
        return 1.0  # the only terminal state is the solved cube

    def scramble(self, p, rng):
        """Apply `p` random twists to the solved cube, never twisting the
        same face twice in a row."""
        if p < 0:
            raise ValueError("scramble length must be >= 0")
        s = self.solved
        last_face = -1
        for _ in range(p):
            while True:
                t = rng.randint(9)
                if t // 3 != last_face:
                    break
            last_face = t // 3
            s = self.twist(s, t)
        return s

    def board_vector(self, s):
        bv = bytearray(24)
        rank = self._rank
        for p in range(8):
            if p == self.FIXED:
                continue
            bv[3 * p] = rank[s[2 * p]]
            bv[3 * p + 1] = s[2 * p + 1]
            bv[3 * p + 2] = s[2 * p + 1]
        return bytes(bv)


_CLASSES = {T.TTT: TicTacToe, T.CONNECT4: Connect4, T.OTHELLO: Othello, T.CUBE2: Cube2}


def make_game(name_or_id):
    gdef = T.game_def(name_or_id)
    return _CLASSES[gdef.gid](gdef)
