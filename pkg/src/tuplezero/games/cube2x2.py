"""2x2x2 pocket cube with the down-back-left corner anchored.

Moves are the nine face twists of the three free faces (U, R, F), each 90,
180 or 270 degrees, all counting as a single move (half-turn metric).
Action id = face * 3 + quarter_turns - 1 with faces ordered U, R, F.

Text form is a 24-character sticker string: for each corner position
0..7 (URF, UFL, ULB, UBR, DFR, DLF, DBL, DRB) three face letters from
"URFDLB", slot order (up/down-facing sticker, left/right, front/back).

The n-tuple board vector also has 24 cells in the same slot order: the
up/down slot of a position holds the id of the occupying movable cubie
(7 values), the two side slots hold its orientation (3 values), and the
anchored corner's cells are constant. Cell value counts are therefore
mixed: m = 7 / 3 / 1 depending on the cell.
"""

from .. import _tables as T
from ..errors import ConfigError

NAME = "cube2x2"
FACES = T.CUBE_FACE_LETTERS  # "URFDLB"
TWIST_NAMES = ("U", "U2", "U'", "R", "R2", "R'", "F", "F2", "F'")

SOLVED_TEXT = None  # filled in below


def to_text(state):
    out = []
    for p in range(8):
        c, o = state[2 * p], state[2 * p + 1]
        for slot in range(3):
            out.append(FACES[T.CUBE_COLORS[c][p][o][slot]])
    return "".join(out)


def from_text(text, mover=None):
    text = text.strip().upper()
    if len(text) != 24 or any(ch not in FACES for ch in text):
        raise ConfigError(f"bad cube sticker string {text!r}")
    state = bytearray(16)
    seen = set()
    for p in range(8):
        triple = tuple(FACES.index(ch) for ch in text[3 * p:3 * p + 3])
        found = None
        for c in range(8):
            for o in range(3):
                if tuple(T.CUBE_COLORS[c][p][o]) == triple:
                    found = (c, o)
                    break
            if found:
                break
        if not found:
            raise ConfigError(f"stickers {text[3 * p:3 * p + 3]!r} fit no cubie at position {p}")
        c, o = found
        if c in seen:
            raise ConfigError(f"cubie {c} appears twice")
        seen.add(c)
        state[2 * p], state[2 * p + 1] = c, o
    if state[2 * T.CUBE_FIXED_CORNER] != T.CUBE_FIXED_CORNER or state[2 * T.CUBE_FIXED_CORNER + 1] != 0:
        raise ConfigError("anchored corner is out of place")
    return bytes(state)


def parse_action(text):
    text = text.strip()
    if text in TWIST_NAMES:
        return TWIST_NAMES.index(text)
    return int(text)


def render(state):
    rows = []
    for p, name in enumerate(("URF", "UFL", "ULB", "UBR", "DFR", "DLF", "DBL", "DRB")):
        c, o = state[2 * p], state[2 * p + 1]
        stickers = "".join(FACES[T.CUBE_COLORS[c][p][o][s]] for s in range(3))
        rows.append(f"{name}: {stickers}")
    return "\n".join(rows)


SOLVED_TEXT = to_text(T.CUBE_SOLVED)
