"""
Capacidad ergódica de los sistemas RIS-RSM.

Para cada realización del canal (tras la selección de antenas):

    C = log2 det( I + Es/(n_S·N0) · Σ_ℓ h_ℓ h_ℓ^H )

donde h_ℓ = G_S^T Φ v_ℓ es el vector de ganancias en las n_S antenas cuando
la RIS apunta a la antena ℓ. La matriz es hermítica semidefinida positiva y
el determinante se obtiene de sus autovalores.

Clases:
    CapacityRecord: Capacidad media en un punto de SNR.

Funciones:
    ergodic_capacity, capacity_curve, ris_baseline_capacity
"""

import dataclasses
import logging
import math

import numpy as np

from channel.rayleigh import sample_channels, snr_db_to_n0
from simulation.link import LinkModel
from simulation.rng import Stream, batch_rng
from simulation.workers import WorkerPool
from utils.errors import DimensionError

LOGGER = logging.getLogger(__name__)

CHANNELS_PER_BLOCK = 500

# Tolerancia relativa para autovalores negativos por redondeo
_TOLERANCIA_PSD = 1e-9


@dataclasses.dataclass(frozen=True)
class CapacityRecord:
    """
    Capacidad ergódica en un punto de SNR.

    Attributes:
        snr_db (float): SNR en dB.
        bits_per_use (float): Capacidad media en bits por uso del canal.
        realizations (int): Canales promediados.
        std_error (float): Error estándar de la media.
    """

    snr_db: float
    bits_per_use: float
    realizations: int
    std_error: float = 0.0


def covariance_eigenvalues(gains):
    """
    Autovalores de Σ_ℓ h_ℓ h_ℓ^H para un lote de ganancias efectivas.

    Args:
        gains (numpy.ndarray): Forma (B, n_S, n_S), fila ℓ = h_ℓ.

    Returns:
        numpy.ndarray: Autovalores no negativos, forma (B, n_S).

    Raises:
        DimensionError: Si algún autovalor es negativo más allá del redondeo.
    """
    # A[a, b] = Σ_ℓ gains[ℓ, a]·conj(gains[ℓ, b])
    a = np.einsum("bla,blc->bac", gains, np.conj(gains))
    a = 0.5 * (a + np.conj(np.swapaxes(a, -1, -2)))
    autovalores = np.linalg.eigvalsh(a)
    escala = np.maximum(np.max(np.abs(autovalores), axis=-1, keepdims=True), 1.0)
    if np.any(autovalores < -_TOLERANCIA_PSD * escala):
        raise DimensionError("La matriz de covarianza no es semidefinida positiva")
    return np.maximum(autovalores, 0.0)


def _capacity_block(tarea):
    config, bloque, canales, n0s = tarea
    modelo = LinkModel(config)
    rng = batch_rng(config.seed, Stream.CAPACITY, 0, bloque)
    _, gains = modelo.draw_channels(rng, canales)
    autovalores = covariance_eigenvalues(gains)
    sumas = []
    for n0 in n0s:
        c = np.sum(np.log2(1.0 + config.es * autovalores / (config.n_S * n0)), axis=-1)
        sumas.append((float(np.sum(c)), float(np.sum(c * c))))
    return sumas


def _baseline_block(tarea):
    config, bloque, canales, n0s = tarea
    rng = batch_rng(config.seed, Stream.BASELINE_CAPACITY, 0, bloque)
    g = sample_channels(rng, canales, config.N, 1)
    ganancia = np.abs(g[:, :, 0]).sum(axis=-1) ** 2
    sumas = []
    for n0 in n0s:
        c = np.log2(1.0 + config.es * ganancia / n0)
        sumas.append((float(np.sum(c)), float(np.sum(c * c))))
    return sumas


def _curve(funcion, config, snr_grid_db, n_channel, pool):
    n_channel = config.n_channel if n_channel is None else int(n_channel)
    if n_channel < 1:
        raise DimensionError("n_channel debe ser al menos 1")
    snr_grid_db = [float(s) for s in snr_grid_db]
    if not snr_grid_db:
        return []
    n0s = [snr_db_to_n0(s, config.es) for s in snr_grid_db]
    tareas = [
        (config, bloque, min(CHANNELS_PER_BLOCK, n_channel - inicio), n0s)
        for bloque, inicio in enumerate(range(0, n_channel, CHANNELS_PER_BLOCK))
    ]
    if pool is None:
        with WorkerPool(config.workers) as propio:
            parciales = propio.map(funcion, tareas)
    else:
        parciales = pool.map(funcion, tareas)

    registros = []
    for i, snr_db in enumerate(snr_grid_db):
        suma = math.fsum(p[i][0] for p in parciales)
        cuadrados = math.fsum(p[i][1] for p in parciales)
        media = suma / n_channel
        varianza = max(cuadrados / n_channel - media * media, 0.0)
        error = math.sqrt(varianza / (n_channel - 1)) if n_channel > 1 else 0.0
        registros.append(CapacityRecord(snr_db, max(media, 0.0), n_channel, error))
        LOGGER.debug("Capacidad %.2f dB: %.4f bits/uso", snr_db, media)
    return registros


def capacity_curve(config, snr_grid_db, n_channel=None, pool=None):
    """
    Capacidad ergódica sobre una malla de SNR con las mismas realizaciones de canal.

    Args:
        config (SimConfig): Configuración del sistema.
        snr_grid_db (Sequence[float]): SNR en dB.
        n_channel (int, optional): Realizaciones (por defecto config.n_channel).
        pool (WorkerPool, optional): Procesos ya creados.

    Returns:
        list: Un CapacityRecord por punto.
    """
    return _curve(_capacity_block, config, snr_grid_db, n_channel, pool)


def ergodic_capacity(config, snr_db, n_channel=None):
    """
    Capacidad ergódica en un punto de SNR.

    Returns:
        CapacityRecord: Capacidad media en bits por uso.
    """
    return capacity_curve(config, [snr_db], n_channel)[0]


def ris_baseline_capacity(config, snr_db, n_channel=None):
    """
    Capacidad de referencia de una RIS alineada con una única antena:
    log2(1 + Es·(Σ_r |g_r|)²/N0) promediada sobre el canal.

    Solo se usan N, Es y la semilla de la configuración.

    Returns:
        CapacityRecord: Capacidad media en bits por uso.
    """
    return _curve(_baseline_block, config, [snr_db], n_channel, None)[0]


def ris_baseline_curve(config, snr_grid_db, n_channel=None, pool=None):
    """Versión de ris_baseline_capacity sobre una malla de SNR."""
    return _curve(_baseline_block, config, snr_grid_db, n_channel, pool)
