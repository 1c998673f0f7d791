"""
Cota de unión semianalítica de la BER media (ABER).

Para un canal fijo, la probabilidad de error por pares de que el detector ML
prefiera la hipótesis (t̂, q̂) frente a la transmitida (t, q) es

    P = Q( sqrt(Υ / (2 N0)) ),   Υ = Es·Σ_ℓ | H_ℓ(t)·s_q − H_ℓ(t̂)·s_q̂ |²

y la ABER se aproxima por

    ABER ≈ 1/(η·2^η) · Σ_{(t,q)} Σ_{(t̂,q̂)} E_H[P]·d_H

donde d_H es la distancia de Hamming entre las tramas. La esperanza sobre el
canal (que incluye la selección de antenas) se evalúa promediando sobre
realizaciones muestreadas.

Clases:
    AberEstimate: Resultado de la cota en un punto de SNR.

Funciones:
    q_function, conditional_pep, aber_union_bound, aber_curve
"""

import dataclasses
import logging
import math

import numpy as np
from scipy.special import erfc

from channel.rayleigh import as_array, effective_gains, snr_db_to_n0
from detectors.base_detector import DetectorKind
from modem.mapping import hamming_matrix
from simulation.link import LinkModel
from simulation.rng import Stream, batch_rng
from simulation.workers import WorkerPool
from utils.errors import DimensionError, DivisionByZero, IndexOutOfRange

LOGGER = logging.getLogger(__name__)

# Elementos máximos de la matriz (canales x hipótesis x hipótesis) por bloque
_ELEMENTOS_POR_BLOQUE = 2_000_000


@dataclasses.dataclass(frozen=True)
class AberEstimate:
    """
    Estimación semianalítica de la ABER.

    Attributes:
        snr_db (float): SNR en dB.
        value (float): ABER aproximada.
        channel_realizations (int): Canales promediados.
        fingerprint (str): Huella de la configuración usada.
    """

    snr_db: float
    value: float
    channel_realizations: int
    fingerprint: str


def q_function(x):
    """
    Función Q gaussiana, Q(x) = erfc(x/√2)/2.

    Args:
        x (float | numpy.ndarray): Argumento.

    Returns:
        float | numpy.ndarray: Probabilidad de la cola.
    """
    valor = 0.5 * erfc(np.asarray(x, dtype=float) / np.sqrt(2.0))
    return float(valor) if np.ndim(valor) == 0 else valor


def conditional_pep(g_s, t, q, t_hat, q_hat, constellation, es, n0):
    """
    Probabilidad de error por pares condicionada al canal.

    Args:
        g_s: Submatriz G_S (N x n_S).
        t, q (int): Hipótesis transmitida (índices desde 1).
        t_hat, q_hat (int): Hipótesis competidora (índices desde 1).
        constellation (Constellation): Constelación del sistema.
        es (float): Energía de símbolo.
        n0 (float): Densidad de ruido.

    Returns:
        float: Q(sqrt(Υ/(2 N0))); vale 0.5 si ambas hipótesis coinciden.

    Raises:
        DivisionByZero: Si N0 = 0.
    """
    if n0 == 0:
        raise DivisionByZero("La probabilidad de error por pares exige N0 > 0")
    g = as_array(g_s)
    if g.ndim != 2:
        raise DimensionError("G_S debe ser bidimensional")
    n_s = g.shape[1]
    for antena in (t, t_hat):
        if not 1 <= antena <= n_s:
            raise IndexOutOfRange(f"Antena fuera de rango: {antena} (n_S={n_s})")
    for simbolo in (q, q_hat):
        if not 1 <= simbolo <= constellation.order:
            raise IndexOutOfRange(f"Símbolo fuera de rango: {simbolo} (M={constellation.order})")

    h = effective_gains(g)
    diferencia = h[t - 1] * constellation.symbol(q) - h[t_hat - 1] * constellation.symbol(q_hat)
    upsilon = es * float(np.sum(np.abs(diferencia) ** 2))
    return q_function(math.sqrt(upsilon / (2.0 * n0)))


def pairwise_upsilon(gains, points, es):
    """
    Υ para todas las parejas de hipótesis de un lote de canales.

    Args:
        gains (numpy.ndarray): Ganancias efectivas, forma (B, n_S, n_S).
        points (numpy.ndarray): Constelación, forma (M,).
        es (float): Energía de símbolo.

    Returns:
        numpy.ndarray: Forma (B, K, K) con K = n_S·M, hipótesis k = t·M + q.
    """
    lote, n_s, _ = gains.shape
    # x[b, k, ℓ] = H_ℓ(t)·s_q sin ruido
    x = (gains[:, :, None, :] * points[None, None, :, None]).reshape(lote, n_s * points.size, n_s)
    energia = np.sum(np.abs(x) ** 2, axis=-1)
    cruzado = np.einsum("bkl,bjl->bkj", x, np.conj(x))
    upsilon = energia[:, :, None] + energia[:, None, :] - 2.0 * np.real(cruzado)
    return es * np.maximum(upsilon, 0.0)


def _aber_block(tarea):
    config, bloque, canales, n0s = tarea
    modelo = LinkModel(config)
    rng = batch_rng(config.seed, Stream.ABER, 0, bloque)
    _, gains = modelo.draw_channels(rng, canales)
    upsilon = pairwise_upsilon(gains, modelo.constellation.points, config.es)
    hamming = hamming_matrix(config.n_S, config.M).astype(float)
    # Las parejas con distancia de Hamming nula no contribuyen
    activas = hamming > 0
    pesos = hamming[activas]
    valores = upsilon[:, activas]
    return [float(np.sum(q_function(np.sqrt(valores / (2.0 * n0))) * pesos)) for n0 in n0s]


def aber_curve(config, snr_grid_db, n_channel=None, pool=None):
    """
    Cota de unión sobre una malla de SNR con las mismas realizaciones de canal.

    Args:
        config (SimConfig): Configuración (sistema, selección, parámetros).
        snr_grid_db (Sequence[float]): SNR en dB.
        n_channel (int, optional): Realizaciones; por defecto config.n_channel.
        pool (WorkerPool, optional): Procesos ya creados.

    Returns:
        list: Un AberEstimate por punto.
    """
    n_channel = config.n_channel if n_channel is None else int(n_channel)
    if n_channel < 1:
        raise DimensionError("n_channel debe ser al menos 1")
    snr_grid_db = [float(s) for s in snr_grid_db]
    if not snr_grid_db:
        return []
    if config.detector is DetectorKind.GREEDY:
        LOGGER.warning("La cota de unión supone detección ML; se compara solo con simulaciones ML")

    n0s = [snr_db_to_n0(s, config.es) for s in snr_grid_db]
    hipotesis = config.n_S * config.M
    por_bloque = max(1, _ELEMENTOS_POR_BLOQUE // (hipotesis * hipotesis))
    tareas = []
    for bloque, inicio in enumerate(range(0, n_channel, por_bloque)):
        tareas.append((config, bloque, min(por_bloque, n_channel - inicio), n0s))

    if pool is None:
        with WorkerPool(config.workers) as propio:
            parciales = propio.map(_aber_block, tareas)
    else:
        parciales = pool.map(_aber_block, tareas)

    escala = config.eta * 2 ** config.eta * n_channel
    huella = config.fingerprint()
    resultado = []
    for i, snr_db in enumerate(snr_grid_db):
        # Suma compensada de los bloques: independiente del reparto entre procesos
        total = math.fsum(p[i] for p in parciales)
        resultado.append(AberEstimate(snr_db, total / escala, n_channel, huella))
        LOGGER.debug("ABER %.2f dB: %.3e", snr_db, total / escala)
    return resultado


def aber_union_bound(config, snr_db, n_channel=None):
    """
    Cota de unión de la ABER en un punto de SNR.

    Args:
        config (SimConfig): Configuración del sistema.
        snr_db (float): SNR en dB.
        n_channel (int, optional): Realizaciones de canal (por defecto config.n_channel).

    Returns:
        AberEstimate: Estimación semianalítica.
    """
    return aber_curve(config, [snr_db], n_channel)[0]
