"""
Detector voraz (GD) en dos etapas.

    1. t̂ = arg max_ℓ |y_ℓ|²
    2. q̂ = arg min_q | y_t̂ − √Es·(Σ_r |g_{r,t̂}|)·s_q |²

La segunda etapa usa siempre la amplitud alineada Σ_r λ_{r,t̂}, aunque solo
coincide con la ganancia real cuando t̂ es la antena transmitida.

Clases:
    GreedyDetector: Implementación del detector voraz.
"""

import numpy as np

from detectors.base_detector import BaseDetector, DetectorKind


class GreedyDetector(BaseDetector):
    kind = DetectorKind.GREEDY
    name = "Greedy"

    def detect_batch(self, y, g_s, gains, constellation, es):
        lote = y.shape[0]
        filas = np.arange(lote)

        # Paso 1: antena con mayor energía recibida (empate al menor índice)
        t_hat = np.argmax(np.abs(y) ** 2, axis=-1)

        # Paso 2: símbolo más cercano con la amplitud alineada de t̂
        amplitud = np.real(gains[filas, t_hat, t_hat])
        muestra = y[filas, t_hat]
        candidatos = np.sqrt(es) * amplitud[:, None] * constellation.points[None, :]
        distancias = np.abs(muestra[:, None] - candidatos) ** 2
        q_hat = np.argmin(distancias, axis=-1)
        return t_hat, q_hat, distancias[filas, q_hat]
