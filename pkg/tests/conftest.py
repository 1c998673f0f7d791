"""Fixtures compartidas de las pruebas."""

import numpy as np
import pytest

from modem.constellation import build_constellation
from simulation.sim_config import SimConfig


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture
def qam4():
    return build_constellation("QAM", 4)


@pytest.fixture
def qam16():
    return build_constellation("QAM", 16)


@pytest.fixture
def bpsk():
    return build_constellation("PSK", 2)


@pytest.fixture
def config_base():
    """Configuración pequeña de AS-RIS-RSM (COAS, ML) para pruebas rápidas."""
    return SimConfig(
        M=4,
        n_R=8,
        n_S=2,
        N=32,
        seed=11,
        min_bit_errors=100,
        max_trials=4000,
        batch_size=500,
        n_channel=200,
    )


def random_channel(rng, n_elements, n_antennas):
    """Matriz compleja CN(0, 1) sin pasar por el módulo de canal."""
    forma = (n_elements, n_antennas)
    return (rng.standard_normal(forma) + 1j * rng.standard_normal(forma)) / np.sqrt(2.0)
