"""
Clase base para los detectores del receptor RSM.

Un detector estima conjuntamente la antena objetivo t̂ y el símbolo q̂ a
partir de la señal recibida en las n_S antenas seleccionadas. Igual que los
selectores, cada detector opera sobre lotes (índices 0-based) y ofrece una
versión de instancia única con índices desde 1.

Clases:
    DetectorKind: Enumeración de detectores.
    DetectionResult: Resultado de una detección.
    BaseDetector: Clase base abstracta.
"""

import enum
from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from channel.rayleigh import ReceivedVector, as_array, effective_gains
from utils.errors import DimensionError


class DetectorKind(enum.Enum):
    ML = "ml"
    GREEDY = "greedy"

    @classmethod
    def parse(cls, valor):
        if isinstance(valor, cls):
            return valor
        texto = str(valor).lower()
        if texto in ("gd", "greedy"):
            return cls.GREEDY
        try:
            return cls(texto)
        except ValueError:
            raise DimensionError(f"Detector no disponible: {valor}. Disponibles: ml, greedy")


@dataclass(frozen=True)
class DetectionResult:
    """
    Antena y símbolo estimados.

    Attributes:
        t_hat (int): Antena estimada (1..n_S).
        q_hat (int): Símbolo estimado (1..M).
        metric (float): Métrica alcanzada (ML) o métrica de la segunda etapa (voraz).
    """

    t_hat: int
    q_hat: int
    metric: float


class BaseDetector(ABC):
    """
    Clase base abstracta para los detectores.

    Attributes:
        kind (DetectorKind): Detector que implementa la subclase.
        name (str): Nombre legible.
    """

    kind = DetectorKind.ML
    name = ""

    @abstractmethod
    def detect_batch(self, y, g_s, gains, constellation, es):
        """
        Detecta un lote de tramas.

        Args:
            y (numpy.ndarray): Señales recibidas, forma (B, n_S).
            g_s (numpy.ndarray): Submatrices seleccionadas, forma (B, N, n_S).
            gains (numpy.ndarray): Ganancias efectivas, forma (B, n_S, n_S).
            constellation (Constellation): Constelación del sistema.
            es (float): Energía de símbolo.

        Returns:
            tuple: (t_hat, q_hat, metric) con índices 0-based de forma (B,).
        """

    def detect(self, y, g_s, constellation, es):
        """
        Detecta una única trama.

        Args:
            y (ReceivedVector | numpy.ndarray): Señal recibida (n_S,).
            g_s: Submatriz G_S (N x n_S).
            constellation (Constellation): Constelación del sistema.
            es (float): Energía de símbolo.

        Returns:
            DetectionResult: Índices desde 1 y métrica.
        """
        muestras = y.y if isinstance(y, ReceivedVector) else np.asarray(y, dtype=complex)
        g = as_array(g_s)
        if g.ndim != 2 or muestras.shape != (g.shape[1],):
            raise DimensionError("La señal recibida debe tener longitud n_S")
        t, q, metrica = self.detect_batch(
            muestras[None], g[None], effective_gains(g[None]), constellation, es
        )
        return DetectionResult(t_hat=int(t[0]) + 1, q_hat=int(q[0]) + 1, metric=float(metrica[0]))
