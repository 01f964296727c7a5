"""Shared fixtures: grids, the Gaussian eigenfunction and a seeded corpus"""

import math

import numpy as np
import pytest

from acceptance import narrow_band_setup
from corpus import generate_corpus
from signal_core import make_signal, symmetric_grid


def gaussian_profile(t):
    return np.exp(-math.pi * np.asarray(t, dtype=float) ** 2)


@pytest.fixture
def grid():
    return symmetric_grid(6.0, 1.0 / 128)


@pytest.fixture
def fine_grid():
    return symmetric_grid(6.0, 1.0 / 256)


@pytest.fixture
def gaussian(grid):
    return make_signal(grid, gaussian_profile)


@pytest.fixture
def fine_gaussian(fine_grid):
    return make_signal(fine_grid, gaussian_profile)


@pytest.fixture
def wave_packet(fine_grid):
    """Shifted, modulated Gaussian: not an eigenfunction of any F_α"""
    return make_signal(
        fine_grid,
        lambda t: np.exp(-math.pi * (t - 0.5) ** 2) * np.exp(1j * math.pi * t),
    )


@pytest.fixture(scope="session")
def corpus():
    return generate_corpus(size=3)


@pytest.fixture(scope="session")
def narrow_band():
    """F_{π/4} content in bumps at 2.12, -2.12 and 4.24"""
    return narrow_band_setup(math.pi / 4)
