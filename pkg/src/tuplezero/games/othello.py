"""Othello (Reversi) 8x8. Black (X) moves first; action 64 is the explicit
pass move, legal exactly when no placement flips anything. Two passes in a
row end the game; the final score is the disc majority."""

from .. import _tables as T
from ..errors import ConfigError

NAME = "othello"
CHARS = ".XO"
PASS = T.OTHELLO_PASS


def to_text(state):
    return "".join(CHARS[v] for v in state[:64])


def from_text(text, mover=0, passes=0):
    text = text.strip()
    if len(text) != 64 or any(ch not in CHARS for ch in text):
        raise ConfigError(f"bad othello board {text!r}")
    cells = bytes(CHARS.index(ch) for ch in text)
    if mover not in (0, 1):
        raise ConfigError(f"bad mover {mover!r}")
    return cells + bytes([mover, passes])


def action_name(a):
    if a == PASS:
        return "pass"
    return "abcdefgh"[a % 8] + str(a // 8 + 1)


def parse_action(text):
    text = text.strip().lower()
    if text == "pass":
        return PASS
    if len(text) == 2 and text[0] in "abcdefgh" and text[1] in "12345678":
        return (int(text[1]) - 1) * 8 + "abcdefgh".index(text[0])
    return int(text)


def render(state):
    rows = ["  a b c d e f g h"]
    for r in range(8):
        rows.append(str(r + 1) + " " + " ".join(CHARS[state[r * 8 + c]] for c in range(8)))
    rows.append(f"to move: {CHARS[state[64] + 1]}  (passes: {state[65]})")
    return "\n".join(rows)
