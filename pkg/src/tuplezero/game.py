"""Public game interface.

A ``Game`` bundles the kernel forward model with static metadata and the
text formats. States are immutable ``bytes`` values; every operation is a
pure function of (state, action), so states can be shared freely between
concurrent searches.
"""

from dataclasses import dataclass

from . import _tables as T
from . import games as gamepkg
from .backend import kern


@dataclass(frozen=True)
class GameSpec:
    """Static facts the n-tuple machinery needs about a game."""

    name: str
    player_count: int
    cell_count: int
    position_values: tuple  # per board cell: number of possible values
    adjacency: tuple        # per board cell: neighbor cell ids


class Game:
    """One game: forward model, scoring, hashing, serialization."""

    def __init__(self, name, backend=None):
        gdef = T.game_def(name)
        self.backend = backend or kern
        k = self.backend.make_game(gdef.gid)
        self._k = k
        self._io = gamepkg.game_module(gdef.name)
        self.name = gdef.name
        self.gid = gdef.gid
        self.n_players = gdef.n_players
        self.n_actions = gdef.n_actions
        self.pass_action = gdef.pass_action if gdef.pass_action >= 0 else None
        self.spec = GameSpec(
            name=gdef.name,
            player_count=gdef.n_players,
            cell_count=gdef.cell_count,
            position_values=gdef.m_vector,
            adjacency=gdef.adjacency,
        )

    # forward model ------------------------------------------------------
    def initial_state(self):
        return self._k.initial_state()

    def legal_actions(self, state):
        return self._k.legal_actions(state)

    def advance(self, state, action):
        return self._k.apply(state, action)

    def is_over(self, state):
        return self._k.is_terminal(state)

    def final_score(self, state, player):
        return self._k.score(state, player)

    def current_player(self, state):
        return self._k.current_player(state)

    def cell_values(self, state):
        return self._k.board_vector(state)

    def state_key(self, state):
        return self._k.state_key(state)

    def scramble(self, twists, rng):
        if not hasattr(self._k, "scramble"):
            raise AttributeError(f"{self.name} has no scramble generator")
        return self._k.scramble(twists, rng)

    # serialization --------------------------------------------------------
    def to_text(self, state):
        return self._io.to_text(state)

    def from_text(self, text, **kw):
        return self._io.from_text(text, **kw)

    def render(self, state):
        return self._io.render(state)

    def parse_action(self, text):
        if hasattr(self._io, "parse_action"):
            return self._io.parse_action(text)
        return int(text)

    def action_name(self, action):
        if hasattr(self._io, "action_name"):
            return self._io.action_name(action)
        return str(action)

    @property
    def kernel(self):
        """The backend game object (needed by kernel-level entry points)."""
        return self._k

    def __repr__(self):
        return f"Game({self.name!r})"


_cache = {}


def get_game(name, backend=None):
    """Shared immutable Game instance for `name` on the default backend."""
    if backend is not None:
        return Game(name, backend)
    game = _cache.get(name)
    if game is None:
        game = _cache[name] = Game(name)
    return game
