"""ConnectFour: 6 rows x 7 columns, gravity, four in a row wins.

Internally row 0 is the bottom row; text boards list the top row first.
Cell coding for the n-tuple input follows the reachable-cell convention:
0 empty and not playable next move, 1/2 player pieces, 3 the lowest empty
cell of a column.
"""

from ..errors import ConfigError

NAME = "connect4"
CHARS = ".XO"


def to_text(state):
    out = []
    for r in range(5, -1, -1):
        for c in range(7):
            out.append(CHARS[state[r * 7 + c]])
    return "".join(out)


def from_text(text, mover=None):
    text = text.strip()
    if len(text) != 42 or any(ch not in CHARS for ch in text):
        raise ConfigError(f"bad connect4 board {text!r}")
    cells = bytearray(42)
    for i, ch in enumerate(text):
        r, c = 5 - i // 7, i % 7
        cells[r * 7 + c] = CHARS.index(ch)
    for c in range(7):  # gravity sanity
        seen_empty = False
        for r in range(6):
            if cells[r * 7 + c] == 0:
                seen_empty = True
            elif seen_empty:
                raise ConfigError(f"floating piece in column {c}")
    if mover is None:
        x, o = cells.count(1), cells.count(2)
        if x - o not in (0, 1):
            raise ConfigError("piece counts do not identify the mover")
        mover = 0 if x == o else 1
    return bytes(cells) + bytes([mover])


def render(state):
    rows = []
    for r in range(5, -1, -1):
        rows.append(" ".join(CHARS[state[r * 7 + c]] for c in range(7)))
    rows.append(" ".join(str(c) for c in range(7)))
    rows.append(f"to move: {CHARS[state[42] + 1]}")
    return "\n".join(rows)
