"""
Selección de antenas optimizada en capacidad (COAS).

Se conservan las n_S columnas del canal con mayor norma de Frobenius al
cuadrado, ordenadas de mayor a menor norma. Ese orden define qué antena
física lleva cada combinación de bits de índice.

Clases:
    COASSelector: Implementación de COAS.
"""

import numpy as np

from selection.base_selector import BaseSelector, SelectionMethod


class COASSelector(BaseSelector):
    """
    Implementación de la técnica COAS.

        ||g_1||² >= ||g_2||² >= ... >= ||g_{n_R}||²,  G_S = [g_1, ..., g_{n_S}]

    Los empates se resuelven a favor del menor índice original. El valor del
    objetivo es la suma de las normas al cuadrado de las columnas elegidas.
    """

    method = SelectionMethod.COAS
    name = "COAS"

    def __init__(self, subset_cap=None):
        # COAS no enumera subconjuntos; el argumento se acepta por uniformidad
        self.subset_cap = subset_cap

    def select_batch(self, g, n_s):
        n_r = g.shape[-1]
        self._validar_dimensiones(n_r, n_s)

        normas = np.sum(np.abs(g) ** 2, axis=-2)
        # argsort estable sobre -norma: mayor norma primero, empate al menor índice
        orden = np.argsort(-normas, axis=-1, kind="stable")[:, :n_s]
        scores = np.take_along_axis(normas, orden, axis=-1).sum(axis=-1)
        return orden.astype(np.intp), scores
