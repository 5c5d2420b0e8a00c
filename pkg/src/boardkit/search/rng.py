"""Deterministic 64-bit RNG shared by the playout engines.

The compiled kernel implements the identical splitmix64 transition, so a
playout produces bit-identical results on either backend given the same
seed. ``rand_below`` deliberately uses plain modulo: the tiny bias is
irrelevant for playouts and keeps the two implementations trivially equal.
"""
from __future__ import annotations

MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & MASK64
    return z ^ (z >> 31)


class Splitmix64:
    __slots__ = ("state",)

    def __init__(self, seed: int = 0):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & MASK64
        return _mix(self.state)

    def rand_below(self, n: int) -> int:
        return self.next_u64() % n

    def uniform(self) -> float:
        """Float in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) / float(1 << 53)

    def clone(self) -> "Splitmix64":
        other = Splitmix64()
        other.state = self.state
        return other


def mix64(*values: int) -> int:
    """Deterministically fold integers into one 64-bit seed."""
    h = _GAMMA
    for v in values:
        h = _mix((h ^ (v & MASK64)) + _GAMMA & MASK64)
    return h
