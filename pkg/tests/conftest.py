from __future__ import annotations

import numpy as np
import pytest

from compolift import _kernels
from compolift.bitmatrix import BitMatrix


def random_orthogonal_bits(n: int, rng: np.random.Generator) -> np.ndarray:
    """Random n x n GF(2) matrix A with A·Aᵀ = I.

    Permutation matrices are orthogonal, as is the 4x4 all-ones-plus-identity
    block (J·Jᵀ = 4J = 0 mod 2); products of orthogonal matrices stay
    orthogonal, so a few random factors give usable variety.
    """
    a = np.eye(n, dtype=np.uint8)
    j4 = ((np.ones((4, 4)) + np.eye(4)) % 2).astype(np.uint8)
    for _ in range(8):
        a = a[rng.permutation(n)]
        if n >= 4 and rng.integers(0, 2):
            pos = int(rng.integers(0, n - 3))
            block = np.eye(n, dtype=np.uint8)
            block[pos : pos + 4, pos : pos + 4] = j4
            a = (a @ block) % 2
    assert np.array_equal((a @ a.T) % 2, np.eye(n, dtype=np.uint8))
    return a


def random_selfdual_generator(n_half: int, rng: np.random.Generator) -> BitMatrix:
    """Standard-form generator [I | A] of a random self-dual [2k, k] code."""
    a = random_orthogonal_bits(n_half, rng)
    return BitMatrix.from_bits(
        np.concatenate([np.eye(n_half, dtype=np.uint8), a], axis=1)
    )


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Trigger JIT compilation once so timed checks measure the algorithms."""
    left = np.array([1, 2], dtype=np.uint64)
    right = np.array([2, 1], dtype=np.uint64)
    counts = np.zeros(130, dtype=np.int64)
    dups = np.zeros(130, dtype=np.int64)
    _kernels.subset_weight_counts(left, right, 2, counts, dups, True)
    _kernels.full_weight_counts(left, right, counts)
    _kernels.find_weight_witness(left, right, 2, 2)
    pattern = np.zeros((2, 2), dtype=np.int64)
    out = np.zeros(1, dtype=np.uint8)
    _kernels.orthogonal_scan(pattern, np.array([1], dtype=np.uint32), out)
    _kernels.lift_scan(pattern, 1, np.array([1], dtype=np.uint32), out)
