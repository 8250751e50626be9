"""Deterministic random numbers.

Both kernel backends implement exactly this splitmix64 generator so that a
seeded run produces the same move sequences and the same weight tables no
matter which backend happens to be selected.  The pure-Python class here is
the reference; the compiled kernel carries a C copy that is checked against
it in the test suite.
"""

MASK64 = 0xFFFFFFFFFFFFFFFF
_GOLDEN = 0x9E3779B97F4A7C15


def splitmix64_next(state):
    """Advance a splitmix64 state, returning (new_state, output)."""
    state = (state + _GOLDEN) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return state, z ^ (z >> 31)


class SplitMix64:
    """Tiny, fast, seedable PRNG with a 64-bit state."""

    def __init__(self, seed):
        self._state = seed & MASK64

    def next_u64(self):
        self._state, out = splitmix64_next(self._state)
        return out

    def random(self):
        """Uniform float in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) * (1.0 / 9007199254740992.0)

    def randint(self, n):
        """Uniform integer in [0, n)."""
        if n <= 0:
            raise ValueError("randint needs n >= 1")
        return int(self.random() * n)

    def choice(self, seq):
        return seq[self.randint(len(seq))]

    def shuffle(self, items):
        for i in range(len(items) - 1, 0, -1):
            j = self.randint(i + 1)
            items[i], items[j] = items[j], items[i]

    def getstate(self):
        return self._state

    def setstate(self, state):
        self._state = state & MASK64


def derive_seed(master, *streams):
    """Derive a child seed from a master seed and integer stream labels.

    Used to hand independent, reproducible seeds to trainers, matches and
    scramble generators without consuming the master sequence.
    """
    state = master & MASK64
    for s in streams:
        state ^= (s & MASK64) * 0xD1342543DE82EF95 & MASK64
        state, out = splitmix64_next(state)
        state = out
    return state
