"""Deterministic 64-bit mixing generator (splitmix64).

These constants are normative for the package: seeded experiment starts and
hash key generation are bit-exact across platforms because every consumer
draws from this generator rather than from platform RNGs.
"""

MASK64 = (1 << 64) - 1

# splitmix64 increment and finalizer multipliers (Steele/Lea/Flood).
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_MULT_1 = 0xBF58476D1CE4E5B9
MIX_MULT_2 = 0x94D049BB133111EB


def mix64(x: int) -> int:
    """splitmix64 finalizer: avalanching bijection on 64-bit words."""
    x &= MASK64
    x = ((x ^ (x >> 30)) * MIX_MULT_1) & MASK64
    x = ((x ^ (x >> 27)) * MIX_MULT_2) & MASK64
    return x ^ (x >> 31)


class SplitMix64:
    """Sequential splitmix64 stream with 64-bit state."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next64(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        return mix64(self.state)

    def below(self, bound: int) -> int:
        """Uniform draw from [0, bound) by reduction.

        Modulo bias is at most bound/2**64 and is irrelevant at the bounds
        used here (< 2**32).
        """
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next64() % bound

    def choice_bit(self) -> int:
        return self.next64() >> 63


def keyed_uniform(seed: int, key: int, bound: int) -> int:
    """Order-independent uniform draw in [0, bound) for a (seed, key) pair.

    Used for per-prime start values so that a parallel sweep produces the
    same draws regardless of scheduling order.
    """
    if bound <= 0:
        raise ValueError("bound must be positive")
    return mix64(seed ^ ((key * GOLDEN_GAMMA) & MASK64)) % bound
