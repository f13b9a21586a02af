"""Deterministic 64-bit generator so seeded runs are byte-reproducible."""

from __future__ import annotations

_MASK = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 sequence; identical output for identical seeds."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform-enough draw from 0..n-1 via multiply-shift."""
        if n <= 0:
            raise ValueError(f"empty draw range {n}")
        return (self.next_u64() * n) >> 64

    def chance(self, p: float) -> bool:
        return self.next_u64() < int(p * 2.0**64)
