"""Tests for the portable seeded shuffle."""

import numpy as np
import pytest

from asdbench.helpers.prng_helper import PortableRng, shuffled_indices


class TestPortableRng:
    """Test suite for PortableRng."""

    def test_same_seed_same_stream(self):
        """Test two generators with one seed agree."""
        a, b = PortableRng(42), PortableRng(42)

        assert [a.next_u64() for _ in range(5)] == [b.next_u64() for _ in range(5)]

    def test_raw_stream_matches_pcg64(self):
        """Test the stream is numpy's raw PCG64 output."""
        expected = np.random.PCG64(7).random_raw(3).tolist()

        rng = PortableRng(7)

        assert [rng.next_u64() for _ in range(3)] == expected

    @pytest.mark.parametrize("bound", [1, 2, 3, 10, 1000])
    def test_below_in_range(self, bound: int):
        """Test bounded draws stay in [0, bound)."""
        rng = PortableRng(3)

        draws = [rng.below(bound) for _ in range(200)]

        assert min(draws) >= 0
        assert max(draws) < bound

    def test_below_rejects_non_positive_bound(self):
        """Test bound 0 is rejected."""
        with pytest.raises(ValueError):
            PortableRng(1).below(0)

    def test_negative_seed(self):
        """Test negative seeds are rejected."""
        with pytest.raises(ValueError, match="non-negative"):
            PortableRng(-1)


class TestShuffledIndices:
    """Test suite for shuffled_indices."""

    @pytest.mark.parametrize("n", [0, 1, 2, 17, 100])
    def test_is_permutation(self, n: int):
        """Test the output is a permutation of 0..n-1."""
        order = shuffled_indices(n, seed=11)

        assert sorted(order.tolist()) == list(range(n))

    def test_deterministic(self):
        """Test (n, seed) fixes the permutation."""
        assert shuffled_indices(50, 42).tolist() == shuffled_indices(50, 42).tolist()

    def test_seed_changes_permutation(self):
        """Test different seeds give different orders."""
        assert shuffled_indices(50, 42).tolist() != shuffled_indices(50, 43).tolist()

    def test_roughly_uniform_first_position(self):
        """Test every index reaches position 0 over many seeds."""
        firsts = {int(shuffled_indices(5, seed)[0]) for seed in range(200)}

        assert firsts == {0, 1, 2, 3, 4}
