"""
Selección de antenas basada en la correlación (ACAS).

Se elige el subconjunto que minimiza la máxima similitud coseno entre pares
de columnas del canal:

    Similarity(g_i, g_j) = |g_i^H g_j| / (||g_i|| ||g_j||)

Clases:
    ACASSelector: Implementación de ACAS.
"""

import logging

import numpy as np

from selection.base_selector import SubsetScoreSelector, SelectionMethod

LOGGER = logging.getLogger(__name__)


def cosine_similarity(gram):
    """
    Similitudes coseno entre columnas a partir de las matrices de Gram.

    Una columna nula tiene similitud 1 con cualquier otra.

    Args:
        gram (numpy.ndarray): Forma (…, n_R, n_R).

    Returns:
        numpy.ndarray: Similitudes reales con la misma forma.
    """
    normas = np.sqrt(np.real(np.diagonal(gram, axis1=-2, axis2=-1)))
    producto = normas[..., :, None] * normas[..., None, :]
    nulas = producto == 0
    if np.any(nulas):
        LOGGER.warning("Columna de canal nula: se toma similitud 1 con las demás")
    return np.where(nulas, 1.0, np.abs(gram) / np.where(nulas, 1.0, producto))


class ACASSelector(SubsetScoreSelector):
    """
    Implementación de la técnica ACAS.

    Requiere n_S >= 2 porque con una sola antena no hay pares que comparar.
    El valor del objetivo es la similitud min-max alcanzada.
    """

    method = SelectionMethod.ACAS
    name = "ACAS"
    min_antennas = 2
    maximize = False

    def _pair_terms(self, gram):
        return None, cosine_similarity(gram)
