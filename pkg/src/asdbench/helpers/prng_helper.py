"""Seeded shuffling that gives the same permutation on every platform.

The generator is numpy's PCG64 bit generator, read through ``random_raw``
(raw 64-bit outputs, independent of numpy's distribution code, which may
change between releases). Bounded integers use rejection sampling and the
permutation is a descending Fisher–Yates shuffle:

    for i in n-1 .. 1:
        j = uniform integer in [0, i]
        swap a[i], a[j]
"""

import numpy as np


_UINT64_SPAN = 1 << 64


class PortableRng:
    """Raw PCG64 stream with unbiased bounded integers."""

    def __init__(self, seed: int) -> None:
        if seed < 0:
            raise ValueError(f"seed must be non-negative, got {seed}")
        self.seed = seed
        self._bit_generator = np.random.PCG64(seed)

    def next_u64(self) -> int:
        return int(self._bit_generator.random_raw())

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)`` by rejection of the biased tail."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        limit = _UINT64_SPAN - (_UINT64_SPAN % bound)
        while True:
            value = self.next_u64()
            if value < limit:
                return value % bound


def shuffled_indices(n: int, seed: int) -> np.ndarray:
    """Permutation of ``0 .. n-1`` determined only by ``(n, seed)``."""
    order = np.arange(n, dtype=np.int64)
    rng = PortableRng(seed)
    for i in range(n - 1, 0, -1):
        j = rng.below(i + 1)
        order[i], order[j] = order[j], order[i]
    return order
