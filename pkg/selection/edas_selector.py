"""
Selección de antenas optimizada en distancia euclídea (EDAS).

Se elige el subconjunto que maximiza la mínima distancia euclídea al
cuadrado entre vectores de transmisión distintos s_1 != s_2, donde cada
vector tiene un único símbolo no nulo en la posición de la antena objetivo.

La distancia ||G_S(s_1 - s_2)||² se descompone en dos casos:
    - misma antena t:      ||g_t||²·|s_a - s_b|², mínimo ||g_t||²·d_min²
    - antenas t != t':     ||g_t s_a - g_t' s_b||²
                           = |s_a|²||g_t||² + |s_b|²||g_t'||² - 2 Re(s_a s_b^* g_t'^H g_t)

Ambos casos solo dependen de la matriz de Gram, que se calcula una vez por
canal y se reutiliza para todos los subconjuntos.

Clases:
    EDASSelector: Implementación de EDAS.

Funciones:
    min_euclidean_distance: Objetivo interno de EDAS para una G_S dada.
"""

import numpy as np

from channel.rayleigh import as_array
from selection.base_selector import SubsetScoreSelector, SelectionMethod, gram_matrices
from utils.errors import DimensionError


def distance_terms(gram, constellation):
    """
    Términos de distancia mínima por antena y por pareja de antenas.

    Args:
        gram (numpy.ndarray): Matrices de Gram, forma (B, n, n).
        constellation (Constellation): Constelación normalizada.

    Returns:
        tuple: (single, pair) con formas (B, n) y (B, n, n).
    """
    puntos = constellation.points
    energia = np.abs(puntos) ** 2
    cruzado = puntos[:, None] * np.conj(puntos)[None, :]

    normas = np.real(np.diagonal(gram, axis1=-2, axis2=-1))
    single = normas * constellation.min_distance_sq

    n = gram.shape[-1]
    pair = np.full(gram.shape, np.inf)
    for i in range(n):
        for j in range(i + 1, n):
            # gram[..., j, i] = g_j^H g_i
            d = (
                energia[None, :, None] * normas[:, i, None, None]
                + energia[None, None, :] * normas[:, j, None, None]
                - 2.0 * np.real(cruzado[None, :, :] * gram[:, j, i, None, None])
            )
            minimo = d.reshape(d.shape[0], -1).min(axis=-1)
            pair[:, i, j] = minimo
            pair[:, j, i] = minimo
    return single, pair


def min_euclidean_distance(g_s, constellation):
    """
    Mínima distancia euclídea al cuadrado entre vectores de transmisión.

    Args:
        g_s: Submatriz G_S (N x n_S).
        constellation (Constellation): Constelación en uso.

    Returns:
        float: min ||G_S (s_1 - s_2)||² sobre s_1 != s_2.
    """
    g = as_array(g_s)
    if g.ndim != 2:
        raise DimensionError("G_S debe ser bidimensional")
    single, pair = distance_terms(gram_matrices(g[None]), constellation)
    return float(min(single.min(), pair.min()))


class EDASSelector(SubsetScoreSelector):
    """
    Implementación de la técnica EDAS.

    El conjunto de vectores de transmisión se construye con la constelación
    normalizada; el valor del objetivo es la distancia max-min alcanzada.

    Attributes:
        constellation (Constellation): Constelación del sistema.
    """

    method = SelectionMethod.EDAS
    name = "EDAS"
    maximize = True

    def __init__(self, constellation, subset_cap=None):
        if constellation is None:
            raise DimensionError("EDAS necesita la constelación del sistema")
        if subset_cap is None:
            super().__init__()
        else:
            super().__init__(subset_cap)
        self.constellation = constellation

    def _validar_dimensiones(self, n_r, n_s):
        super()._validar_dimensiones(n_r, n_s)
        if n_s & (n_s - 1):
            raise DimensionError(f"EDAS: n_S debe ser potencia de dos (n_S={n_s})")

    def _pair_terms(self, gram):
        return distance_terms(gram, self.constellation)
