"""Breadth-first closure of the 2x2x2 twist group (anchored corner).

States are ranked perfectly: Lehmer rank of the 7 movable cubies times
3^7 orientation digits, giving 5040 * 2187 = 11,022,480 slots.  The
reachable count must come out at 7! * 3^6 = 3,674,160.
"""

from .. import _tables as T
from .games import make_game

_P7 = [p for p in range(8) if p != T.CUBE_FIXED_CORNER]
_FACT = [1, 1, 2, 6, 24, 120, 720]
_RANK = [0, 1, 2, 3, 4, 5, 0, 6]  # movable-cubie rank; slot 6 unused

INDEX_SPACE = 5040 * 2187


def cube_index(s):
    perm = [_RANK[s[2 * p]] for p in _P7]
    r = 0
    for i in range(7):
        smaller = 0
        for j in range(i + 1, 7):
            if perm[j] < perm[i]:
                smaller += 1
        r += smaller * _FACT[6 - i]
    o = 0
    for p in _P7:
        o = o * 3 + s[2 * p + 1]
    return r * 2187 + o


def cube_bfs_counts(max_depth=-1):
    """(total states reached, per-depth counts) of BFS from the solved cube.

    `max_depth` < 0 explores to closure.  The pure-Python walk of the whole
    group takes minutes; the compiled kernel does it in under a second.
    """
    game = make_game(T.CUBE2)
    visited = bytearray(INDEX_SPACE)
    start = game.initial_state()
    visited[cube_index(start)] = 1
    frontier = [start]
    counts = [1]
    depth = 0
    while frontier and (max_depth < 0 or depth < max_depth):
        nxt = []
        for s in frontier:
            for t in range(9):
                s2 = game.twist(s, t)
                i = cube_index(s2)
                if not visited[i]:
                    visited[i] = 1
                    nxt.append(s2)
        if not nxt:
            break
        counts.append(len(nxt))
        frontier = nxt
        depth += 1
    return sum(counts), counts
