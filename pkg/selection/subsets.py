"""
Enumeración lexicográfica de los subconjuntos de antenas receptoras.

Clases:
    SubsetIterator: Recorre los C(n_R, n_S) subconjuntos una sola vez.

Funciones:
    enumerate_subsets: Crea el iterador validando el tamaño de la enumeración.
"""

import itertools
import logging
from math import comb

import numpy as np

from utils.errors import DimensionError, TooLarge

LOGGER = logging.getLogger(__name__)

MAX_ANTENNAS = 24
DEFAULT_SUBSET_CAP = 10 ** 6
# A partir de este número de subconjuntos se avisa del coste de ACAS/EDAS
WARN_SUBSETS = 10 ** 4


class SubsetIterator:
    """
    Iterador sobre los subconjuntos de tamaño n_S de {1, ..., n_R}.

    Los subconjuntos se producen en orden lexicográfico como tuplas
    ordenadas de índices desde 1.

    Attributes:
        n_r (int): Número de antenas disponibles.
        n_s (int): Tamaño de cada subconjunto.
    """

    def __init__(self, n_r, n_s):
        self.n_r = n_r
        self.n_s = n_s
        self._cursor = itertools.combinations(range(1, n_r + 1), n_s)

    def __iter__(self):
        return self

    def __next__(self):
        return next(self._cursor)

    def __len__(self):
        return comb(self.n_r, self.n_s)

    def as_array(self):
        """
        Devuelve todos los subconjuntos como arreglo 0-based.

        Returns:
            numpy.ndarray: Forma (C(n_R, n_S), n_S), orden lexicográfico.
        """
        combinaciones = itertools.combinations(range(self.n_r), self.n_s)
        return np.array(list(combinaciones), dtype=np.intp).reshape(-1, self.n_s)


def enumerate_subsets(n_r, n_s, cap=DEFAULT_SUBSET_CAP):
    """
    Crea el iterador de subconjuntos de antenas.

    Args:
        n_r (int): Antenas disponibles (1..24).
        n_s (int): Antenas a seleccionar (1..n_R).
        cap (int): Máximo número de subconjuntos permitido.

    Returns:
        SubsetIterator: Iterador lexicográfico.

    Raises:
        DimensionError: Si no se cumple 0 < n_S <= n_R <= 24.
        TooLarge: Si C(n_R, n_S) supera el límite.
    """
    if not 0 < n_s <= n_r <= MAX_ANTENNAS:
        raise DimensionError(
            f"Se requiere 0 < n_S <= n_R <= {MAX_ANTENNAS} (n_R={n_r}, n_S={n_s})"
        )
    total = comb(n_r, n_s)
    if total > cap:
        raise TooLarge(f"C({n_r}, {n_s}) = {total} subconjuntos supera el límite {cap}")
    if total > WARN_SUBSETS:
        LOGGER.warning("La selección recorrerá %d subconjuntos por canal", total)
    return SubsetIterator(n_r, n_s)
