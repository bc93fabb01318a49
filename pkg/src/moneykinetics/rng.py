"""Deterministic 64-bit random stream used by all simulations.

The generator is splitmix64 (Steele, Lea, Flood 2014): a counter-based
recurrence with a 64-bit state, cheap enough to re-implement identically
inside compiled kernels.  Every run records the algorithm name so traces
can be reproduced by any conforming implementation.
"""

from __future__ import annotations

ALGORITHM = "splitmix64"

_MASK = 0xFFFFFFFFFFFFFFFF
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """splitmix64 stream seeded with an unsigned 64-bit integer."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Integer uniform on [0, n). Modulo reduction; bias is O(n/2^64)."""
        return self.next_u64() % n

    def uniform(self) -> float:
        """float64 uniform on [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0 ** -53
