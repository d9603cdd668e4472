"""Deterministic pseudo-random numbers for reproducible corpora.

SplitMix64 is used instead of Python's Mersenne Twister so that a corpus is
reproducible from the seed and this file alone, in any language.  The update
rule is

    state  = (state + 0x9E3779B97F4A7C15) mod 2^64
    z      = state
    z      = (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9   mod 2^64
    z      = (z XOR (z >> 27)) * 0x94D049BB133111EB   mod 2^64
    output = z XOR (z >> 31)

Bounded draws use plain modulo reduction; the tiny bias is irrelevant here,
bit-for-bit determinism is what matters.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Seeded 64-bit generator; identical seeds give identical streams."""

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in the inclusive range [lo, hi]."""
        if lo > hi:
            raise ValueError(f"empty range [{lo}, {hi}]")
        return lo + self.next_u64() % (hi - lo + 1)

    def choice(self, seq):
        if not seq:
            raise ValueError("choice from empty sequence")
        return seq[self.next_u64() % len(seq)]

    def spawn(self, tag: int) -> "SplitMix64":
        """Independent stream derived from this seed and an integer tag."""
        return SplitMix64(self.next_u64() ^ (tag * 0xD1B54A32D192ED03))
