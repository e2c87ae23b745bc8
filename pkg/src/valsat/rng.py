"""Pinned pseudo-random number generator.

Every stochastic component of this package draws from SplitMix64 (Vigna's
public-domain generator, the seed expander of the xoshiro family).  The
algorithm is fixed here on purpose: runs are reproducible bit for bit from a
64-bit seed across platforms and builds, and the same stream can be consumed
from compiled kernels (see ``_kernels.py``) and from pure Python without
divergence.  Reference outputs are frozen in the test suite.

Integer draws in a range use rejection sampling, so they are exactly uniform,
not approximately so.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB


class SplitMix64:
    """SplitMix64 stream seeded with a 64-bit integer."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        """Next raw 64-bit output."""
        self.state = (self.state + _GOLDEN) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * _MIX1) & MASK64
        z = ((z ^ (z >> 27)) * _MIX2) & MASK64
        return z ^ (z >> 31)

    def bounded(self, n: int) -> int:
        """Uniform integer in [0, n), exact via rejection."""
        if n <= 0:
            raise ValueError("bounded() needs n >= 1")
        r = (1 << 64) % n
        while True:
            z = self.next_u64()
            if z >= r:
                return z % n

    def coin(self) -> bool:
        """Fair coin flip (top bit of one draw)."""
        return bool(self.next_u64() >> 63)

    def unit(self) -> float:
        """Uniform float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * 2.0**-53


def derive_seed(seed: int, *parts: int) -> int:
    """Deterministically derive an independent substream seed.

    Used to give benchmark cells and restarts their own streams without
    coupling their draw counts.
    """
    s = SplitMix64(seed).next_u64()
    for p in parts:
        s = SplitMix64(s ^ (p & MASK64)).next_u64()
    return s
