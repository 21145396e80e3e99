"""Deterministic pseudo-randomness for fixture generation.

Everything seeded in this package runs on SplitMix64: a 64-bit state
advanced by a fixed odd constant and scrambled by a finalizer.  The
algorithm is ten lines, has no hidden global state, and is trivial to
reimplement bit-for-bit elsewhere, which keeps generated fixtures
portable across toolchains.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """SplitMix64 stream with the usual small-integer conveniences."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return _mix(self._state)

    def randbelow(self, n: int) -> int:
        if n <= 0:
            raise ValueError("randbelow needs n >= 1")
        return self.next_u64() % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi], inclusive."""
        return lo + self.randbelow(hi - lo + 1)

    def choice(self, seq):
        if not seq:
            raise ValueError("choice on empty sequence")
        return seq[self.randbelow(len(seq))]

    def shuffle(self, items: list) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.randbelow(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, seq, k: int) -> list:
        items = list(seq)
        if k > len(items):
            raise ValueError("sample larger than population")
        self.shuffle(items)
        return items[:k]

    def spawn(self, tag: int) -> "SplitMix64":
        """Independent child stream; stable for a fixed (seed, tag)."""
        return SplitMix64(_mix(self._state ^ _mix(tag & _MASK)))


def stable_hash(seed: int, *ints: int) -> int:
    """Order-sensitive 64-bit hash of an integer tuple.

    Deterministic across processes (unlike builtin hash), used for
    seeded coloring oracles.
    """
    acc = _mix(seed & _MASK)
    for x in ints:
        acc = _mix((acc + _GAMMA) & _MASK ^ _mix(x & _MASK))
    return acc
