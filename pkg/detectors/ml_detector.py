"""
Detector de máxima verosimilitud (ML) conjunto de antena y símbolo.

Se minimiza por búsqueda exhaustiva sobre las n_S·M hipótesis:

    (t̂, q̂) = arg min Σ_ℓ | y_ℓ − √Es·H_ℓ(t)·s_q |²

donde H_ℓ(t) es la ganancia efectiva en la antena ℓ cuando la RIS apunta a t.

Clases:
    MLDetector: Implementación del detector ML.
"""

import numpy as np

from detectors.base_detector import BaseDetector, DetectorKind


def ml_metrics(y, gains, points, es):
    """
    Métricas ML de todas las hipótesis de un lote.

    Args:
        y (numpy.ndarray): Forma (B, n_S).
        gains (numpy.ndarray): Forma (B, n_S, n_S), fila = antena objetivo.
        points (numpy.ndarray): Puntos de la constelación, forma (M,).
        es (float): Energía de símbolo.

    Returns:
        numpy.ndarray: Forma (B, n_S, M).
    """
    hipotesis = np.sqrt(es) * gains[:, :, None, :] * points[None, None, :, None]
    diferencia = y[:, None, None, :] - hipotesis
    return np.sum(np.abs(diferencia) ** 2, axis=-1)


class MLDetector(BaseDetector):
    """
    Detector ML exhaustivo.

    Los empates se resuelven a favor del menor t y después del menor q, que es
    el primer mínimo del arreglo aplanado en orden (t, q).
    """

    kind = DetectorKind.ML
    name = "ML"

    def detect_batch(self, y, g_s, gains, constellation, es):
        metricas = ml_metrics(y, gains, constellation.points, es)
        lote, n_s, orden = metricas.shape
        plano = metricas.reshape(lote, n_s * orden)
        mejor = np.argmin(plano, axis=-1)
        return mejor // orden, mejor % orden, plano[np.arange(lote), mejor]
