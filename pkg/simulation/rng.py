"""
Subflujos de números aleatorios deterministas.

Cada lote de trabajo recibe su propio generador derivado de la semilla del
experimento y de una clave (flujo, punto, lote). Así el resultado depende
solo de la semilla y no de qué proceso ejecuta cada lote ni de cuántos
procesos haya.
"""

import enum

from numpy.random import SeedSequence, default_rng


class Stream(enum.IntEnum):
    BER = 0
    ABER = 1
    CAPACITY = 2
    BASELINE_CAPACITY = 3


def batch_rng(seed, stream, point_index, batch_index):
    """
    Generador para un lote concreto.

    Args:
        seed (int): Semilla de 64 bits del experimento.
        stream (Stream): Tipo de cálculo.
        point_index (int): Índice del punto de SNR en la malla.
        batch_index (int): Índice del lote dentro del punto.

    Returns:
        numpy.random.Generator: Generador PCG64 independiente.
    """
    secuencia = SeedSequence(entropy=seed, spawn_key=(int(stream), int(point_index), int(batch_index)))
    return default_rng(secuencia)
