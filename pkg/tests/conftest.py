import numpy as np
import pytest

from eurkit.sampling import random_basis, random_density, random_pure_ket

SEED = 20240817


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


@pytest.fixture
def random_states(rng):
    """A small mixed bag of pure and mixed qutrit states."""
    states = [random_density(rng, pure=True) for _ in range(10)]
    states += [random_density(rng) for _ in range(10)]
    return states


@pytest.fixture
def basis_pair(rng):
    return random_basis(rng, label="R"), random_basis(rng, label="S")


def pure_kets(rng, n, dim=3):
    return [random_pure_ket(rng, dim) for _ in range(n)]
