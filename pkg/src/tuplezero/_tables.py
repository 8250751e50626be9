"""Static per-game tables shared by both kernel backends.

Everything here is computed once at import time in plain Python and then
consumed read-only by the pure-Python kernel and by the compiled kernel
(which copies the arrays into C storage when a game object is built).
Keeping a single source of truth for zobrist codes, cube twist tables and
win-line lists is what makes the two backends bit-for-bit interchangeable.

State byte layouts
------------------
tictactoe  10 bytes: cells[9] (0 empty, 1 X, 2 O) + player-to-move
connect4   43 bytes: cells[42] row-major, row 0 = bottom + player-to-move
othello    66 bytes: cells[64] row-major, row 0 = top (0 empty, 1 black,
           2 white) + player-to-move + consecutive-pass count
cube2x2    16 bytes: per corner position p in 0..7 the pair
           (cubie id at p, orientation 0..2); position 6 (DBL) is the
           anchor and always holds cubie 6 with orientation 0.
"""

from dataclasses import dataclass, field

import numpy as np

from .rng import SplitMix64

TTT, CONNECT4, OTHELLO, CUBE2 = 0, 1, 2, 3

GAME_NAMES = {TTT: "tictactoe", CONNECT4: "connect4", OTHELLO: "othello", CUBE2: "cube2x2"}
GAME_IDS = {name: gid for gid, name in GAME_NAMES.items()}

OTHELLO_PASS = 64  # action id of the explicit pass move

_ZOBRIST_SEED = 0x7A3D58C1B42F96E0


# ---------------------------------------------------------------------------
# cube geometry
# ---------------------------------------------------------------------------
# Corner positions as (x, y, z) in {-1, +1}^3; axes: x = R/L, y = U/D, z = F/B.
CUBE_CORNERS = (
    (1, 1, 1),     # 0 URF
    (-1, 1, 1),    # 1 UFL
    (-1, 1, -1),   # 2 ULB
    (1, 1, -1),    # 3 UBR
    (1, -1, 1),    # 4 DFR
    (-1, -1, 1),   # 5 DLF
    (-1, -1, -1),  # 6 DBL, held fixed
    (1, -1, -1),   # 7 DRB
)
CUBE_FIXED_CORNER = 6
CUBE_FACE_LETTERS = "URFDLB"
CUBE_N_TWISTS = 9  # faces U, R, F x {90, 180, 270} in the half-turn metric


def _face_of(direction):
    x, y, z = direction
    if y == 1:
        return 0  # U
    if x == 1:
        return 1  # R
    if z == 1:
        return 2  # F
    if y == -1:
        return 3  # D
    if x == -1:
        return 4  # L
    return 5      # B


def _slot_dirs(pos):
    """The three outward face normals of a corner, in slot order (y, x, z)."""
    x, y, z = pos
    return ((0, y, 0), (x, 0, 0), (0, 0, z))


def _rot90(axis, v):
    """Right-handed quarter turn of a vector about a coordinate axis."""
    x, y, z = v
    if axis == 0:
        return (x, -z, y)
    if axis == 1:
        return (z, y, -x)
    return (-y, x, z)


def _rot_k(axis, v, k):
    for _ in range(k % 4):
        v = _rot90(axis, v)
    return v


def _build_cube_twists():
    """Per twist: source-position table and orientation remap.

    Twist id = face_index * 3 + (quarter_turns - 1) over faces (U, R, F),
    so the fixed DBL corner is never moved.  Applying twist t:

        new_cubie[p] = cubie[src[t][p]]
        new_ori[p]   = ori_map[t][p][ori[src[t][p]]]
    """
    faces = ((1, 1), (0, 1), (2, 1))  # (axis, layer sign) for U, R, F
    src = np.zeros((9, 8), dtype=np.int8)
    ori_map = np.zeros((9, 8, 3), dtype=np.int8)
    pos_index = {p: i for i, p in enumerate(CUBE_CORNERS)}
    for fi, (axis, sign) in enumerate(faces):
        for k in (1, 2, 3):
            t = fi * 3 + (k - 1)
            for i, pos in enumerate(CUBE_CORNERS):
                src[t][i] = i
                for o in range(3):
                    ori_map[t][i][o] = o
            for i, pos in enumerate(CUBE_CORNERS):
                if pos[axis] != sign:
                    continue
                new_pos = _rot_k(axis, pos, k)
                j = pos_index[new_pos]
                src[t][j] = i
                dirs_from = _slot_dirs(pos)
                dirs_to = _slot_dirs(new_pos)
                for o in range(3):
                    moved = _rot_k(axis, dirs_from[o], k)
                    ori_map[t][j][o] = dirs_to.index(moved)
    return src, ori_map


def _cube_rotation_group():
    """All 24 rotations of the cube as vector maps."""

    def compose(f, g):
        return lambda v: f(g(v))

    base = [lambda v, a=a: _rot90(a, v) for a in range(3)]
    ident = lambda v: v
    group = {}

    def key_of(fn):
        return tuple(fn(v) for v in ((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    pending = [ident]
    group[key_of(ident)] = ident
    while pending:
        fn = pending.pop()
        for b in base:
            nfn = compose(b, fn)
            k = key_of(nfn)
            if k not in group:
                group[k] = nfn
                pending.append(nfn)
    assert len(group) == 24
    return list(group.values())


def _build_cube_colors():
    """CUBE_COLORS[c][p][o][slot] = face letter index shown at that sticker.

    For cubie `c` sitting at position `p` with orientation `o`, gives the
    colors at the position's three sticker slots.  Derived by brute force
    over the cube rotation group, used for text serialization only.
    """
    group = _cube_rotation_group()
    colors = np.full((8, 8, 3, 3), -1, dtype=np.int8)
    for c, home in enumerate(CUBE_CORNERS):
        home_dirs = _slot_dirs(home)
        home_faces = [_face_of(d) for d in home_dirs]
        for rot in group:
            p = rot(home)
            pi = CUBE_CORNERS.index(p)
            dirs_to = _slot_dirs(p)
            placed = [rot(d) for d in home_dirs]
            # orientation = slot where the cubie's y-axis (U/D) sticker sits
            o = dirs_to.index(placed[0])
            for s_home, d in enumerate(placed):
                slot = dirs_to.index(d)
                colors[c][pi][o][slot] = home_faces[s_home]
    return colors


def _cube_board_adjacency():
    """Edge adjacency of the 24 sticker squares on the cube surface."""

    def square(pos, direction):
        # returns (plane axis, plane coord, in-plane axes, in-plane center)
        axis = next(a for a in range(3) if direction[a] != 0)
        others = tuple(a for a in range(3) if a != axis)
        center = tuple(pos[a] * 0.5 for a in others)
        return axis, direction[axis], others, center

    cells = []
    for pi, pos in enumerate(CUBE_CORNERS):
        for d in _slot_dirs(pos):
            cells.append((pos, d))
    adj = [[] for _ in range(24)]
    for i in range(24):
        for j in range(i + 1, 24):
            (p1, d1), (p2, d2) = cells[i], cells[j]
            if d1 == d2 and p1 != p2:
                a1 = square(p1, d1)
                diff = sum(1 for u, v in zip(a1[3], square(p2, d2)[3]) if u != v)
                touch = diff == 1
            elif p1 == p2 and d1 != d2:
                touch = True  # two stickers of one cubie fold around its edge
            else:
                touch = False
            if touch:
                adj[i].append(j)
                adj[j].append(i)
    return tuple(tuple(sorted(n)) for n in adj)


CUBE_TWIST_SRC, CUBE_TWIST_ORI = _build_cube_twists()
CUBE_COLORS = _build_cube_colors()

# board-vector rank of each cubie among the seven movable ones
CUBE_MOVABLE_RANK = np.array([0, 1, 2, 3, 4, 5, 0, 6], dtype=np.int8)

CUBE_SOLVED = bytes(b for c in range(8) for b in (c, 0))


def cube_twist_inverse(t):
    face, k = divmod(t, 3)
    return face * 3 + (2 - k)


# ---------------------------------------------------------------------------
# grid helpers
# ---------------------------------------------------------------------------

def _grid_adjacency(rows, cols):
    """8-point neighborhood on a rows x cols grid, row-major cells."""
    adj = []
    for r in range(rows):
        for c in range(cols):
            n = []
            for dr in (-1, 0, 1):
                for dc in (-1, 0, 1):
                    if dr == 0 and dc == 0:
                        continue
                    rr, cc = r + dr, c + dc
                    if 0 <= rr < rows and 0 <= cc < cols:
                        n.append(rr * cols + cc)
            adj.append(tuple(sorted(n)))
    return tuple(adj)


def _connect4_lines():
    """All 69 four-in-a-row cell windows of the 6x7 board."""
    lines = []
    for r in range(6):
        for c in range(7):
            for dr, dc in ((0, 1), (1, 0), (1, 1), (1, -1)):
                rr, cc = r + 3 * dr, c + 3 * dc
                if 0 <= rr < 6 and 0 <= cc < 7:
                    lines.append([(r + i * dr) * 7 + (c + i * dc) for i in range(4)])
    assert len(lines) == 69
    return np.array(lines, dtype=np.int16)


CONNECT4_LINES = _connect4_lines()


def _othello_rays():
    """For every cell the board rays in all 8 directions.

    OTHELLO_RAY_LEN[cell][d] gives the ray length, OTHELLO_RAY_CELLS[cell][d]
    the up-to-7 cell indices walking outward from (but excluding) the cell.
    """
    lens = np.zeros((64, 8), dtype=np.int8)
    cells = np.full((64, 8, 7), -1, dtype=np.int8)
    dirs = ((-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1))
    for r in range(8):
        for c in range(8):
            cell = r * 8 + c
            for d, (dr, dc) in enumerate(dirs):
                rr, cc, k = r + dr, c + dc, 0
                while 0 <= rr < 8 and 0 <= cc < 8:
                    cells[cell][d][k] = rr * 8 + cc
                    k += 1
                    rr += dr
                    cc += dc
                lens[cell][d] = k
    return lens, cells


OTHELLO_RAY_LEN, OTHELLO_RAY_CELLS = _othello_rays()


def _zobrist(gid, state_size, n_values=8):
    rng = SplitMix64(_ZOBRIST_SEED ^ (gid * 0xA5A5A5A5A5A5A5A5))
    table = np.empty((state_size, n_values), dtype=np.uint64)
    for i in range(state_size):
        for v in range(n_values):
            table[i, v] = rng.next_u64()
    return table


def _othello_initial():
    cells = bytearray(64)
    cells[3 * 8 + 3] = 2  # d4 white
    cells[4 * 8 + 4] = 2  # e5 white
    cells[3 * 8 + 4] = 1  # e4 black
    cells[4 * 8 + 3] = 1  # d5 black
    return bytes(cells) + bytes((0, 0))  # black to move, no passes yet


# ---------------------------------------------------------------------------
# game definitions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GameDef:
    """Static description of one game, shared by both kernel backends."""

    gid: int
    name: str
    n_players: int
    state_size: int
    n_actions: int
    cell_count: int
    m_vector: tuple
    adjacency: tuple
    initial: bytes
    zobrist: np.ndarray = field(repr=False)
    pass_action: int = -1


def _build_defs():
    defs = {}
    defs[TTT] = GameDef(
        gid=TTT, name="tictactoe", n_players=2, state_size=10, n_actions=9,
        cell_count=9, m_vector=(3,) * 9, adjacency=_grid_adjacency(3, 3),
        initial=bytes(10), zobrist=_zobrist(TTT, 10),
    )
    defs[CONNECT4] = GameDef(
        gid=CONNECT4, name="connect4", n_players=2, state_size=43, n_actions=7,
        cell_count=42, m_vector=(4,) * 42, adjacency=_grid_adjacency(6, 7),
        initial=bytes(43), zobrist=_zobrist(CONNECT4, 43),
    )
    defs[OTHELLO] = GameDef(
        gid=OTHELLO, name="othello", n_players=2, state_size=66, n_actions=65,
        cell_count=64, m_vector=(4,) * 64, adjacency=_grid_adjacency(8, 8),
        initial=_othello_initial(), zobrist=_zobrist(OTHELLO, 66),
        pass_action=OTHELLO_PASS,
    )
    cube_m = []
    for p in range(8):
        cube_m.extend((1, 1, 1) if p == CUBE_FIXED_CORNER else (7, 3, 3))
    defs[CUBE2] = GameDef(
        gid=CUBE2, name="cube2x2", n_players=1, state_size=16, n_actions=9,
        cell_count=24, m_vector=tuple(cube_m), adjacency=_cube_board_adjacency(),
        initial=CUBE_SOLVED, zobrist=_zobrist(CUBE2, 16),
    )
    return defs


GAME_DEFS = _build_defs()


def game_def(name_or_id):
    if isinstance(name_or_id, str):
        try:
            return GAME_DEFS[GAME_IDS[name_or_id]]
        except KeyError:
            raise KeyError(f"unknown game {name_or_id!r}; choose from {sorted(GAME_IDS)}")
    return GAME_DEFS[name_or_id]
