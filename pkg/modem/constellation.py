"""
Constelaciones M-QAM y M-PSK con etiquetado Gray y energía media unitaria.

Clases:
    ModulationKind: Tipo de constelación (QAM o PSK).
    Constellation: Conjunto de símbolos con sus etiquetas de bits.

Funciones:
    build_constellation: Construye una constelación normalizada.
    gray_code: Código Gray reflejado de un entero.
"""

import enum
import logging
from dataclasses import dataclass, field

import numpy as np

from utils.errors import UnsupportedOrder
from utils.validation_utils import es_potencia_de_dos

LOGGER = logging.getLogger(__name__)

MAX_ORDER = 1024


class ModulationKind(enum.Enum):
    QAM = "QAM"
    PSK = "PSK"

    @classmethod
    def parse(cls, valor):
        if isinstance(valor, cls):
            return valor
        try:
            return cls(str(valor).upper())
        except ValueError:
            raise UnsupportedOrder(f"Modulación no soportada: {valor}")


def gray_code(valor):
    """Devuelve el código Gray reflejado de un entero no negativo."""
    return valor ^ (valor >> 1)


@dataclass(frozen=True, eq=False)
class Constellation:
    """
    Constelación M-aria con etiquetas Gray.

    El símbolo de índice q (1..M) es points[q-1] y su etiqueta es labels[q-1],
    que coincide con la representación binaria de q-1. Así el índice de
    símbolo y los últimos log2(M) bits de una trama se corresponden
    directamente.

    Attributes:
        kind (ModulationKind): QAM o PSK.
        order (int): Número de puntos M.
        points (numpy.ndarray): Puntos complejos normalizados, forma (M,).
        labels (tuple): Cadenas de bits de longitud log2(M).
        grid_shape (tuple): (niveles I, niveles Q) para QAM; (M,) para PSK.
    """

    kind: ModulationKind
    order: int
    points: np.ndarray
    labels: tuple
    grid_shape: tuple = field(default=())

    @property
    def bits_per_symbol(self):
        return self.order.bit_length() - 1

    @property
    def average_energy(self):
        return float(np.mean(np.abs(self.points) ** 2))

    @property
    def min_distance_sq(self):
        """Mínima distancia euclídea al cuadrado entre puntos distintos."""
        diferencias = self.points[:, None] - self.points[None, :]
        d2 = np.abs(diferencias) ** 2
        np.fill_diagonal(d2, np.inf)
        return float(d2.min())

    def symbol(self, q):
        """Devuelve el punto de índice q (1..M)."""
        return complex(self.points[q - 1])


def _qam_grid(order):
    # Rejilla rectangular: el eje I recibe el bit sobrante cuando log2(M) es impar
    bits = order.bit_length() - 1
    bits_i = (bits + 1) // 2
    bits_q = bits // 2
    niveles_i = 1 << bits_i
    niveles_q = 1 << bits_q

    puntos = np.zeros(order, dtype=complex)
    for i in range(niveles_i):
        for j in range(niveles_q):
            etiqueta = (gray_code(i) << bits_q) | gray_code(j)
            # I crece con i; Q decrece con j para reproducir el orden -1+j, -1-j, 1+j, 1-j
            puntos[etiqueta] = complex(2 * i - (niveles_i - 1), (niveles_q - 1) - 2 * j)
    return puntos, (niveles_i, niveles_q)


def _psk_ring(order):
    puntos = np.zeros(order, dtype=complex)
    for i in range(order):
        puntos[gray_code(i)] = np.exp(2j * np.pi * i / order)
    return puntos, (order,)


def build_constellation(kind, order):
    """
    Construye una constelación QAM o PSK normalizada y con etiquetado Gray.

    Args:
        kind (ModulationKind | str): "QAM" o "PSK".
        order (int): Número de puntos M (potencia de dos, 2 <= M <= 1024).

    Returns:
        Constellation: Constelación con energía media 1.

    Raises:
        UnsupportedOrder: Si M no es potencia de dos o está fuera de rango.
    """
    kind = ModulationKind.parse(kind)
    if not es_potencia_de_dos(order) or order < 2 or order > MAX_ORDER:
        raise UnsupportedOrder(f"Orden de constelación no soportado: {order}")
    order = int(order)

    if kind is ModulationKind.QAM:
        puntos, forma = _qam_grid(order)
    else:
        puntos, forma = _psk_ring(order)

    # Normalización a energía media unitaria
    puntos = puntos / np.sqrt(np.mean(np.abs(puntos) ** 2))
    puntos.setflags(write=False)

    bits = order.bit_length() - 1
    etiquetas = tuple(format(k, f"0{bits}b") for k in range(order))

    LOGGER.debug("Constelación %s-%d construida (rejilla %s)", kind.value, order, forma)
    return Constellation(kind=kind, order=order, points=puntos, labels=etiquetas, grid_shape=forma)
