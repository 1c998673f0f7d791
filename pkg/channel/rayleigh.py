"""
Canal Rayleigh entre los elementos de la RIS y las antenas receptoras.

Este módulo implementa el muestreo del canal, el perfil de fases que la RIS
aplica para alinear la señal con la antena objetivo, las ganancias efectivas
resultantes y la generación de la señal recibida con ruido.

Convenciones:
    - G tiene forma (N, n_R): fila r = elemento de la RIS, columna = antena.
    - Cada entrada es CN(0, 1).
    - SNR = Es/N0 (energía, no amplitud, en el numerador).
    - Las funciones con sufijo plural operan sobre un eje de lote inicial y
      usan índices 0-based; las de instancia única usan t en [1, n_S].

Clases:
    ChannelMatrix, PhaseProfile, ReceivedVector
"""

import logging
from dataclasses import dataclass

import numpy as np

from utils.errors import DimensionError, DivisionByZero, IndexOutOfRange

LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ChannelMatrix:
    """
    Matriz de canal G de dimensiones N x n_R.

    Attributes:
        g (numpy.ndarray): Coeficientes complejos, forma (N, n_R).
    """

    g: np.ndarray

    @property
    def n_elements(self):
        return self.g.shape[0]

    @property
    def n_antennas(self):
        return self.g.shape[1]

    def columns(self, indices):
        """Submatriz G_S con las columnas indicadas (índices desde 1)."""
        return self.g[:, [i - 1 for i in indices]]

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.g, dtype=dtype)


@dataclass(frozen=True, eq=False)
class PhaseProfile:
    """
    Matriz de fases Φ (N x n_S); la columna ℓ alinea la RIS con la antena ℓ.
    """

    phases: np.ndarray

    def column(self, t):
        """Vector de reflexión Ψ para la antena objetivo t (desde 1)."""
        return self.phases[:, t - 1]


@dataclass(frozen=True, eq=False)
class ReceivedVector:
    """
    Señal recibida en las n_S antenas seleccionadas.

    Attributes:
        y (numpy.ndarray): Muestras complejas, forma (n_S,).
        n0 (float): Densidad de ruido N0.
        es (float): Energía de símbolo Es.
    """

    y: np.ndarray
    n0: float
    es: float


def as_array(matriz):
    """Devuelve los coeficientes de un ChannelMatrix o de un arreglo."""
    if isinstance(matriz, ChannelMatrix):
        return matriz.g
    return np.asarray(matriz, dtype=complex)


def snr_db_to_n0(snr_db, es=1.0):
    """Convierte una SNR en dB (Es/N0) en la densidad de ruido N0."""
    return es / (10.0 ** (snr_db / 10.0))


def sample_channels(rng, batch, n_elements, n_antennas):
    """
    Muestrea un lote de matrices de canal i.i.d. CN(0, 1).

    Returns:
        numpy.ndarray: Forma (batch, N, n_R).
    """
    forma = (batch, n_elements, n_antennas)
    real = rng.standard_normal(forma)
    imag = rng.standard_normal(forma)
    return (real + 1j * imag) / np.sqrt(2.0)


def sample_channel(rng, n_elements, n_antennas):
    """
    Muestrea la matriz de canal entre la RIS y las antenas receptoras.

    Args:
        rng (numpy.random.Generator): Generador con semilla.
        n_elements (int): Número N de elementos de la RIS.
        n_antennas (int): Número n_R de antenas receptoras.

    Returns:
        ChannelMatrix: Matriz N x n_R con entradas CN(0, 1).
    """
    if n_elements < 1 or n_antennas < 1:
        raise DimensionError("N y n_R deben ser al menos 1")
    return ChannelMatrix(sample_channels(rng, 1, n_elements, n_antennas)[0])


def phase_profiles(g_s):
    """
    Fases de alineamiento e^{jφ} = conj(g)/|g| para un lote (…, N, n_S).

    Las entradas exactamente nulas reciben fase 1.
    """
    modulo = np.abs(g_s)
    nulas = modulo == 0
    if np.any(nulas):
        LOGGER.warning("Coeficiente de canal nulo en %d entradas; se usa fase 1", int(nulas.sum()))
        modulo = np.where(nulas, 1.0, modulo)
        return np.where(nulas, 1.0 + 0j, np.conj(g_s) / modulo)
    return np.conj(g_s) / modulo


def phase_profile(g_s):
    """
    Perfil de fases de la RIS para cada antena objetivo posible.

    Args:
        g_s: Submatriz seleccionada G_S (N x n_S).

    Returns:
        PhaseProfile: Φ con Φ[r, ℓ]·g[r, ℓ] real no negativo.
    """
    return PhaseProfile(phase_profiles(as_array(g_s)))


def effective_gains(g_s, phases=None):
    """
    Ganancias efectivas para todas las antenas objetivo de un lote.

    H[..., t, ℓ] = Σ_r g[..., r, ℓ]·Φ[..., r, t]; la diagonal vale Σ_r |g[r, t]|.

    Args:
        g_s (numpy.ndarray): Forma (…, N, n_S).
        phases (numpy.ndarray, optional): Φ ya calculada con la misma forma.

    Returns:
        numpy.ndarray: Forma (…, n_S, n_S), fila = antena objetivo.
    """
    if phases is None:
        phases = phase_profiles(g_s)
    ganancias = np.einsum("...rl,...rt->...tl", g_s, phases)
    # La diagonal es real por construcción; se fija para evitar residuos numéricos
    n_s = g_s.shape[-1]
    diagonal = np.abs(g_s).sum(axis=-2)
    ganancias[..., np.arange(n_s), np.arange(n_s)] = diagonal
    return ganancias


def _check_antenna(t, n_s):
    if not 1 <= t <= n_s:
        raise IndexOutOfRange(f"Antena objetivo fuera de rango: {t} (n_S={n_s})")


def effective_gain(g_s, t):
    """
    Ganancia compuesta vista por cada antena cuando la RIS apunta a t.

    Args:
        g_s: Submatriz G_S (N x n_S).
        t (int): Antena objetivo (1..n_S).

    Returns:
        numpy.ndarray: Vector complejo de longitud n_S; la componente t es Σ_r λ_{r,t}.
    """
    g = as_array(g_s)
    _check_antenna(t, g.shape[1])
    return effective_gains(g)[t - 1]


def transmit(g_s, frame, constellation, es, n0, rng):
    """
    Genera la señal recibida y = √Es·H(t)·s_q + w.

    Args:
        g_s: Submatriz G_S (N x n_S).
        frame (FrameSymbol): Antena y símbolo transmitidos.
        constellation (Constellation): Constelación en uso.
        es (float): Energía de símbolo.
        n0 (float): Densidad de ruido (0 produce una salida sin ruido).
        rng (numpy.random.Generator): Generador para el ruido.

    Returns:
        ReceivedVector: Muestras en las n_S antenas.
    """
    g = as_array(g_s)
    n_s = g.shape[1]
    _check_antenna(frame.antenna_index, n_s)
    if n0 < 0:
        raise DimensionError("N0 no puede ser negativo")

    h = effective_gains(g)[frame.antenna_index - 1]
    y = np.sqrt(es) * h * constellation.symbol(frame.symbol_index)
    if n0 > 0:
        y = y + complex_noise(rng, (n_s,), n0)
    return ReceivedVector(y=y, n0=float(n0), es=float(es))


def complex_noise(rng, forma, n0):
    """Ruido CN(0, N0) con la forma indicada."""
    real = rng.standard_normal(forma)
    imag = rng.standard_normal(forma)
    return np.sqrt(n0 / 2.0) * (real + 1j * imag)


def target_snr(g_s, t, es, n0):
    """
    SNR instantánea maximizada en la antena objetivo: Es·(Σ_r λ_{r,t})²/N0.

    Raises:
        DivisionByZero: Si N0 = 0.
    """
    if n0 == 0:
        raise DivisionByZero("La SNR no está definida con N0 = 0")
    g = as_array(g_s)
    _check_antenna(t, g.shape[1])
    amplitud = np.abs(g[:, t - 1]).sum()
    return float(es * amplitud ** 2 / n0)
