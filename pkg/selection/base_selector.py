"""
Clase base para los selectores de antenas receptoras.

Este módulo define la interfaz común de las técnicas de selección (COAS,
ACAS, EDAS y la ausencia de selección). Cada selector trabaja sobre un lote
de canales para que el simulador Monte Carlo pueda vectorizar, y ofrece
además una versión de instancia única que devuelve un SelectionResult.

Clases:
    SelectionMethod: Enumeración de las técnicas disponibles.
    SelectionResult: Resultado de una selección.
    BaseSelector: Clase base abstracta para todos los selectores.
    SubsetScoreSelector: Base para los selectores que recorren subconjuntos.
    NoSelection: Usa todas las antenas (RIS-RSM convencional).
"""

import enum
from abc import ABC, abstractmethod
from dataclasses import dataclass

import numpy as np

from channel.rayleigh import as_array
from selection.subsets import DEFAULT_SUBSET_CAP, enumerate_subsets
from utils.errors import DimensionError

# Elementos máximos de los tensores intermedios (lote x subconjuntos x pares)
_ELEMENTOS_POR_BLOQUE = 2_000_000


class SelectionMethod(enum.Enum):
    NONE = "none"
    COAS = "coas"
    ACAS = "acas"
    EDAS = "edas"

    @classmethod
    def parse(cls, valor):
        if isinstance(valor, cls):
            return valor
        if valor is None:
            return cls.NONE
        try:
            return cls(str(valor).lower())
        except ValueError:
            disponibles = ", ".join(m.value for m in cls)
            raise DimensionError(f"Técnica de selección no disponible: {valor}. Disponibles: {disponibles}")


@dataclass(frozen=True)
class SelectionResult:
    """
    Antenas elegidas por una técnica de selección.

    Attributes:
        method (SelectionMethod): Técnica empleada.
        indices (tuple): Índices desde 1 de las n_S antenas, en el orden en
            que llevan los bits de índice de antena.
        score (float): Valor del objetivo de la técnica en la selección.
    """

    method: SelectionMethod
    indices: tuple
    score: float

    def submatrix(self, g):
        """Devuelve G_S para la matriz de canal completa g (N x n_R)."""
        return as_array(g)[:, [i - 1 for i in self.indices]]


def gram_matrices(g):
    """G^H G para un lote de canales (…, N, n_R)."""
    return np.einsum("...ri,...rj->...ij", np.conj(g), g)


def gather_columns(g, indices):
    """
    Extrae las columnas seleccionadas de un lote de canales.

    Args:
        g (numpy.ndarray): Forma (B, N, n_R).
        indices (numpy.ndarray): Índices 0-based, forma (B, n_S).

    Returns:
        numpy.ndarray: G_S con forma (B, N, n_S).
    """
    return np.take_along_axis(g, indices[:, None, :], axis=2)


class BaseSelector(ABC):
    """
    Clase base abstracta para las técnicas de selección de antenas.

    Attributes:
        method (SelectionMethod): Técnica que implementa la subclase.
        name (str): Nombre legible.
        min_antennas (int): Mínimo n_S admitido por la técnica.
    """

    method = SelectionMethod.NONE
    name = ""
    min_antennas = 1

    def _validar_dimensiones(self, n_r, n_s):
        if not self.min_antennas <= n_s <= n_r:
            raise DimensionError(
                f"{self.name}: se requiere {self.min_antennas} <= n_S <= n_R (n_R={n_r}, n_S={n_s})"
            )

    @abstractmethod
    def select_batch(self, g, n_s):
        """
        Selecciona antenas para un lote de canales.

        Args:
            g (numpy.ndarray): Canales con forma (B, N, n_R).
            n_s (int): Número de antenas a seleccionar.

        Returns:
            tuple: (indices, scores) con indices 0-based de forma (B, n_S)
            y scores de forma (B,).
        """

    def select(self, g, n_s):
        """
        Selecciona antenas para una única matriz de canal.

        Args:
            g (ChannelMatrix | numpy.ndarray): Matriz N x n_R.
            n_s (int): Número de antenas a seleccionar.

        Returns:
            SelectionResult: Índices desde 1 y valor del objetivo.
        """
        matriz = as_array(g)
        if matriz.ndim != 2:
            raise DimensionError("La matriz de canal debe ser bidimensional")
        indices, scores = self.select_batch(matriz[None], n_s)
        return SelectionResult(
            method=self.method,
            indices=tuple(int(i) + 1 for i in indices[0]),
            score=float(scores[0]),
        )

    def get_info(self):
        """
        Devuelve información sobre la técnica.

        Returns:
            dict: Nombre y técnica.
        """
        return {"name": self.name, "method": self.method.value}


class NoSelection(BaseSelector):
    """Sin selección: se usan las n_R antenas en su orden natural."""

    method = SelectionMethod.NONE
    name = "Sin selección"

    def select_batch(self, g, n_s):
        n_r = g.shape[-1]
        if n_s != n_r:
            raise DimensionError(f"Sin selección se requiere n_S = n_R (n_R={n_r}, n_S={n_s})")
        indices = np.broadcast_to(np.arange(n_r, dtype=np.intp), (g.shape[0], n_r))
        return np.array(indices), np.zeros(g.shape[0])


class SubsetScoreSelector(BaseSelector):
    """
    Base para técnicas que evalúan un objetivo en cada subconjunto.

    Las subclases calculan, a partir de las matrices de Gram del lote, un
    término por antena y una matriz de términos por pareja; el objetivo de un
    subconjunto combina los términos de sus antenas y de sus parejas. El
    recorrido lexicográfico y la elección de la primera posición óptima
    resuelven los empates a favor del menor subconjunto.

    Attributes:
        subset_cap (int): Límite de subconjuntos por canal.
        maximize (bool): True si el objetivo se maximiza.
    """

    maximize = True

    def __init__(self, subset_cap=DEFAULT_SUBSET_CAP):
        self.subset_cap = subset_cap

    @abstractmethod
    def _pair_terms(self, gram):
        """
        Términos por antena y por pareja.

        Args:
            gram (numpy.ndarray): Matrices de Gram, forma (B, n_R, n_R).

        Returns:
            tuple: (single, pair) con single de forma (B, n_R) o None y pair
            de forma (B, n_R, n_R) (solo se usan las entradas i < j).
        """

    def _subset_scores(self, single, pair, subsets):
        n_s = subsets.shape[1]
        # max-min para objetivos que se maximizan, min-max para los que se minimizan
        reducir = np.min if self.maximize else np.max
        partes = []
        if single is not None:
            partes.append(reducir(single[:, subsets], axis=-1))
        if n_s > 1:
            pa, pb = np.triu_indices(n_s, k=1)
            valores = pair[:, subsets[:, pa], subsets[:, pb]]
            partes.append(reducir(valores, axis=-1))
        if len(partes) == 1:
            return partes[0]
        return reducir(np.stack(partes, axis=-1), axis=-1)

    def select_batch(self, g, n_s):
        n_r = g.shape[-1]
        self._validar_dimensiones(n_r, n_s)
        subsets = enumerate_subsets(n_r, n_s, self.subset_cap).as_array()

        gram = gram_matrices(g)
        single, pair = self._pair_terms(gram)

        # Bloques sobre el lote para acotar la memoria de (B, C, pares)
        n_pares = max(n_s * (n_s - 1) // 2, 1)
        bloque = max(1, _ELEMENTOS_POR_BLOQUE // (len(subsets) * n_pares))
        indices = np.empty((g.shape[0], n_s), dtype=np.intp)
        scores = np.empty(g.shape[0])
        for inicio in range(0, g.shape[0], bloque):
            fin = min(inicio + bloque, g.shape[0])
            s = self._subset_scores(
                None if single is None else single[inicio:fin],
                pair[inicio:fin],
                subsets,
            )
            mejor = np.argmax(s, axis=-1) if self.maximize else np.argmin(s, axis=-1)
            indices[inicio:fin] = subsets[mejor]
            scores[inicio:fin] = s[np.arange(fin - inicio), mejor]
        return indices, scores
