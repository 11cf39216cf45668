"""Seeded, counter-based sample streams for the verification suites.

All suite randomness flows from a single integer seed through a Philox
counter-based generator, so reports are reproducible across platforms.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np


class SampleStream:
    """Deterministic stream of complex, rational and integer samples."""

    def __init__(self, seed: int):
        if seed <= 0:
            raise ValueError("seed must be positive")
        self.seed = seed
        self._gen = np.random.Generator(np.random.Philox(seed))

    def complex_disk(self, radius: float = 2.0) -> complex:
        """Uniform over the disk of the given radius."""
        r = radius * float(np.sqrt(self._gen.uniform()))
        theta = float(self._gen.uniform(0.0, 2.0 * np.pi))
        return complex(r * np.cos(theta), r * np.sin(theta))

    def real(self, lo: float = -2.0, hi: float = 2.0) -> float:
        return float(self._gen.uniform(lo, hi))

    def integer(self, lo: int, hi: int) -> int:
        return int(self._gen.integers(lo, hi + 1))

    def rational(self, max_num: int = 9, max_den: int = 7, nonzero: bool = False) -> Fraction:
        while True:
            q = Fraction(self.integer(-max_num, max_num), self.integer(1, max_den))
            if q != 0 or not nonzero:
                return q
