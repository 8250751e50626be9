"""TicTacToe: 3x3, X moves first. Cell coding 0 empty / 1 X / 2 O."""

from ..errors import ConfigError

NAME = "tictactoe"
CHARS = ".XO"


def to_text(state):
    return "".join(CHARS[v] for v in state[:9])


def from_text(text, mover=None):
    text = text.strip()
    if len(text) != 9 or any(ch not in CHARS for ch in text):
        raise ConfigError(f"bad tictactoe board {text!r}")
    cells = bytes(CHARS.index(ch) for ch in text)
    if mover is None:
        x, o = cells.count(1), cells.count(2)
        if x - o not in (0, 1):
            raise ConfigError("piece counts do not identify the mover")
        mover = 0 if x == o else 1
    return cells + bytes([mover])


def render(state):
    rows = []
    for r in range(3):
        rows.append(" ".join(CHARS[state[3 * r + c]] for c in range(3)))
    rows.append(f"to move: {CHARS[state[9] + 1]}")
    return "\n".join(rows)
