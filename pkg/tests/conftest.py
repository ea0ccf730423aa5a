"""Shared helpers: matrix generators and the embedded n=7 basis fixtures."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest


def consistent_from_stimuli(s) -> np.ndarray:
    """Quotient matrix m_ij = s_i / s_j of a positive stimuli vector."""
    s = np.asarray(s, dtype=float)
    return s[:, None] / s[None, :]


def random_reciprocal(rng: np.random.Generator, n: int, spread: float = 2.0) -> np.ndarray:
    """Random reciprocal matrix with log entries uniform in +-spread."""
    m = np.ones((n, n))
    for i in range(n):
        for j in range(i + 1, n):
            m[i, j] = np.exp(rng.uniform(-spread, spread))
            m[j, i] = 1.0 / m[i, j]
    return m


def random_positive(rng: np.random.Generator, n: int, spread: float = 2.0) -> np.ndarray:
    """Random positive matrix, not reciprocal, unit diagonal not enforced."""
    return np.exp(rng.uniform(-spread, spread, size=(n, n)))


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260809)


# Reference raw basis for n=7, written out literally.
RAW_BASIS_7 = {
    1: [
        [0, 1, 1, 1, 1, 1, 1],
        [-1, 0, 0, 0, 0, 0, 0],
        [-1, 0, 0, 0, 0, 0, 0],
        [-1, 0, 0, 0, 0, 0, 0],
        [-1, 0, 0, 0, 0, 0, 0],
        [-1, 0, 0, 0, 0, 0, 0],
        [-1, 0, 0, 0, 0, 0, 0],
    ],
    2: [
        [0, 0, 1, 1, 1, 1, 1],
        [0, 0, 1, 1, 1, 1, 1],
        [-1, -1, 0, 0, 0, 0, 0],
        [-1, -1, 0, 0, 0, 0, 0],
        [-1, -1, 0, 0, 0, 0, 0],
        [-1, -1, 0, 0, 0, 0, 0],
        [-1, -1, 0, 0, 0, 0, 0],
    ],
    3: [
        [0, 0, 0, 1, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 1],
        [0, 0, 0, 1, 1, 1, 1],
        [-1, -1, -1, 0, 0, 0, 0],
        [-1, -1, -1, 0, 0, 0, 0],
        [-1, -1, -1, 0, 0, 0, 0],
        [-1, -1, -1, 0, 0, 0, 0],
    ],
    4: [
        [0, 0, 0, 0, 1, 1, 1],
        [0, 0, 0, 0, 1, 1, 1],
        [0, 0, 0, 0, 1, 1, 1],
        [0, 0, 0, 0, 1, 1, 1],
        [-1, -1, -1, -1, 0, 0, 0],
        [-1, -1, -1, -1, 0, 0, 0],
        [-1, -1, -1, -1, 0, 0, 0],
    ],
    5: [
        [0, 0, 0, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 1, 1],
        [-1, -1, -1, -1, -1, 0, 0],
        [-1, -1, -1, -1, -1, 0, 0],
    ],
    6: [
        [0, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 0, 1],
        [0, 0, 0, 0, 0, 0, 1],
        [-1, -1, -1, -1, -1, -1, 0],
    ],
}

F = Fraction

# Reference orthogonal basis for n=7, exact rationals.
ORTHOGONAL_BASIS_7 = {
    1: [
        [0, 1, 1, 1, 1, 1, 1],
        [-1, 0, 0, 0, 0, 0, 0],
        [-1, 0, 0, 0, 0, 0, 0],
        [-1, 0, 0, 0, 0, 0, 0],
        [-1, 0, 0, 0, 0, 0, 0],
        [-1, 0, 0, 0, 0, 0, 0],
        [-1, 0, 0, 0, 0, 0, 0],
    ],
    2: [
        [0, F(-5, 6), F(1, 6), F(1, 6), F(1, 6), F(1, 6), F(1, 6)],
        [F(5, 6), 0, 1, 1, 1, 1, 1],
        [F(-1, 6), -1, 0, 0, 0, 0, 0],
        [F(-1, 6), -1, 0, 0, 0, 0, 0],
        [F(-1, 6), -1, 0, 0, 0, 0, 0],
        [F(-1, 6), -1, 0, 0, 0, 0, 0],
        [F(-1, 6), -1, 0, 0, 0, 0, 0],
    ],
    3: [
        [0, 0, F(-4, 5), F(1, 5), F(1, 5), F(1, 5), F(1, 5)],
        [0, 0, F(-4, 5), F(1, 5), F(1, 5), F(1, 5), F(1, 5)],
        [F(4, 5), F(4, 5), 0, 1, 1, 1, 1],
        [F(-1, 5), F(-1, 5), -1, 0, 0, 0, 0],
        [F(-1, 5), F(-1, 5), -1, 0, 0, 0, 0],
        [F(-1, 5), F(-1, 5), -1, 0, 0, 0, 0],
        [F(-1, 5), F(-1, 5), -1, 0, 0, 0, 0],
    ],
    4: [
        [0, 0, 0, F(-3, 4), F(1, 4), F(1, 4), F(1, 4)],
        [0, 0, 0, F(-3, 4), F(1, 4), F(1, 4), F(1, 4)],
        [0, 0, 0, F(-3, 4), F(1, 4), F(1, 4), F(1, 4)],
        [F(3, 4), F(3, 4), F(3, 4), 0, 1, 1, 1],
        [F(-1, 4), F(-1, 4), F(-1, 4), -1, 0, 0, 0],
        [F(-1, 4), F(-1, 4), F(-1, 4), -1, 0, 0, 0],
        [F(-1, 4), F(-1, 4), F(-1, 4), -1, 0, 0, 0],
    ],
    5: [
        [0, 0, 0, 0, F(-2, 3), F(1, 3), F(1, 3)],
        [0, 0, 0, 0, F(-2, 3), F(1, 3), F(1, 3)],
        [0, 0, 0, 0, F(-2, 3), F(1, 3), F(1, 3)],
        [0, 0, 0, 0, F(-2, 3), F(1, 3), F(1, 3)],
        [F(2, 3), F(2, 3), F(2, 3), F(2, 3), 0, 1, 1],
        [F(-1, 3), F(-1, 3), F(-1, 3), F(-1, 3), -1, 0, 0],
        [F(-1, 3), F(-1, 3), F(-1, 3), F(-1, 3), -1, 0, 0],
    ],
    6: [
        [0, 0, 0, 0, 0, F(-1, 2), F(1, 2)],
        [0, 0, 0, 0, 0, F(-1, 2), F(1, 2)],
        [0, 0, 0, 0, 0, F(-1, 2), F(1, 2)],
        [0, 0, 0, 0, 0, F(-1, 2), F(1, 2)],
        [0, 0, 0, 0, 0, F(-1, 2), F(1, 2)],
        [F(1, 2), F(1, 2), F(1, 2), F(1, 2), F(1, 2), 0, 1],
        [F(-1, 2), F(-1, 2), F(-1, 2), F(-1, 2), F(-1, 2), -1, 0],
    ],
}
