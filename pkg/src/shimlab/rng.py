"""Counter-based splittable random numbers.

Every draw is a pure function of (seed, path): a path is any tuple of
integers or strings naming the consumer (curve index, point index, axis).
Workers drawing disjoint paths produce identical values no matter how the
work is sharded, which is what makes every pipeline output reproducible
across worker counts.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _splitmix(z: int) -> int:
    z = (z + _GOLDEN) & _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


def _fold_token(state: int, token) -> int:
    if isinstance(token, str):
        h = 1469598103934665603  # FNV-1a
        for byte in token.encode():
            h = ((h ^ byte) * 1099511628211) & _MASK
        token = h
    elif not isinstance(token, int):
        raise TypeError(f"rng path tokens must be int or str, got {type(token)}")
    return _splitmix(state ^ (token & _MASK) ^ ((token >> 64) & _MASK))


class CounterRng:
    """Stateless generator: value = mix(seed, *path)."""

    def __init__(self, seed: int):
        self.seed = seed & _MASK

    def u64(self, *path) -> int:
        state = _splitmix(self.seed)
        for token in path:
            state = _fold_token(state, token)
        return _splitmix(state)

    def uniform(self, *path) -> float:
        """Float in [0, 1) with 53 random bits."""
        return (self.u64(*path) >> 11) * (1.0 / (1 << 53))

    def integer(self, bound: int, *path) -> int:
        """Integer in [0, bound) by rejection (bound <= 2^32)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        span = (1 << 64) - ((1 << 64) % bound)
        k = 0
        while True:
            x = self.u64(*path, k)
            if x < span:
                return x % bound
            k += 1
