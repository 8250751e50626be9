"""Game registry: rule metadata, text serialization and fixtures.

The forward models themselves live in the kernel backends; these modules
hold everything that is not speed-critical (board text formats, pretty
printing, named positions).
"""

from . import connect4, cube2x2, othello, tictactoe

_MODULES = {
    "tictactoe": tictactoe,
    "connect4": connect4,
    "othello": othello,
    "cube2x2": cube2x2,
}

GAME_NAMES = tuple(sorted(_MODULES))


def game_module(name):
    try:
        return _MODULES[name]
    except KeyError:
        raise KeyError(f"unknown game {name!r}; choose from {GAME_NAMES}")
