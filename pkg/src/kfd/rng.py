"""Portable deterministic pseudo-random numbers.

Byte-identical dataset generation across platforms requires a generator
that is fully specified by its constants, independent of any runtime
library version.  This module implements xoshiro256** (Blackman/Vigna),
seeded through SplitMix64, together with the derived draws the package
needs (uniform doubles, Gaussians, bounded integers, shuffling).

Algorithm constants:

* SplitMix64: state increment 0x9E3779B97F4A7C15; mix multipliers
  0xBF58476D1CE4E5B9 and 0x94D049BB133111EB with shifts 30, 27, 31.
* xoshiro256**: output ``rotl(s1 * 5, 7) * 9``; state update uses the
  shift/rotate pair (17, 45).
* Uniform doubles take the top 53 bits: ``(u64 >> 11) * 2**-53``.
* Gaussians use the Box-Muller transform on consecutive uniforms; the
  second value of each pair is cached and returned by the next call.
* Bounded integers use rejection sampling below the largest multiple of
  ``n`` that fits in 64 bits, so every draw is exactly uniform.
* Shuffling is a Fisher-Yates pass from the last index down.
"""

from __future__ import annotations

import math

import numpy as np

_MASK64 = (1 << 64) - 1


def _splitmix64(state: int):
    """One SplitMix64 step: returns (new_state, output)."""
    state = (state + 0x9E3779B97F4A7C15) & _MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return state, z ^ (z >> 31)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK64


class Rng:
    """xoshiro256** stream seeded from a single 64-bit integer."""

    def __init__(self, seed: int):
        seed = int(seed) & _MASK64
        state = seed
        s = []
        for _ in range(4):
            state, out = _splitmix64(state)
            s.append(out)
        self._s = s
        self._gauss_spare = None

    def next_u64(self) -> int:
        s0, s1, s2, s3 = self._s
        result = (_rotl((s1 * 5) & _MASK64, 7) * 9) & _MASK64
        t = (s1 << 17) & _MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        self._s = [s0, s1, s2, s3]
        return result

    def random(self) -> float:
        """Uniform double in [0, 1) with 53 bits of precision."""
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def randbelow(self, n: int) -> int:
        """Uniform integer in [0, n), rejection-sampled (no modulo bias)."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = ((1 << 64) // n) * n
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi] inclusive."""
        return lo + self.randbelow(hi - lo + 1)

    def gauss(self) -> float:
        """Standard normal via Box-Muller; pairs are drawn, one is cached."""
        if self._gauss_spare is not None:
            z = self._gauss_spare
            self._gauss_spare = None
            return z
        u1 = self.random()
        while u1 <= 0.0:
            u1 = self.random()
        u2 = self.random()
        r = math.sqrt(-2.0 * math.log(u1))
        theta = 2.0 * math.pi * u2
        self._gauss_spare = r * math.sin(theta)
        return r * math.cos(theta)

    def gaussians(self, n: int) -> np.ndarray:
        """n standard normals as a float64 array, in stream order."""
        return np.array([self.gauss() for _ in range(n)], dtype=np.float64)

    def uniforms(self, n: int) -> np.ndarray:
        return np.array([self.random() for _ in range(n)], dtype=np.float64)

    def shuffle(self, seq) -> None:
        """In-place Fisher-Yates shuffle (last index down)."""
        for i in range(len(seq) - 1, 0, -1):
            j = self.randbelow(i + 1)
            seq[i], seq[j] = seq[j], seq[i]

    def unit_vector(self, dim: int) -> np.ndarray:
        """Random unit vector: dim Gaussians, normalized."""
        while True:
            v = self.gaussians(dim)
            norm = np.linalg.norm(v)
            if norm > 1e-12:
                return v / norm

    def unit_vector_orthogonal_to(self, base: np.ndarray) -> np.ndarray:
        """Random unit vector orthogonal to ``base`` (assumed unit norm)."""
        while True:
            v = self.gaussians(len(base))
            v -= (v @ base) * base
            norm = np.linalg.norm(v)
            if norm > 1e-12:
                return v / norm
