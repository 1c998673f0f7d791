"""
Utilidades sobre curvas de BER: SNR para una BER objetivo y ganancias en dB.

Funciones:
    snr_at_ber: Interpola la SNR a la que una curva alcanza una BER.
    snr_gap_db: Separación horizontal entre dos curvas.
    monotone_within_ci: Comprueba que una curva no crece fuera de sus intervalos.
"""

import numpy as np


def snr_at_ber(snr_db, ber, target):
    """
    SNR a la que una curva de BER alcanza el valor objetivo.

    Se interpola linealmente log10(BER) frente a la SNR en el primer tramo
    que contiene el objetivo. Los puntos con BER nula se ignoran.

    Args:
        snr_db (Sequence[float]): SNR en dB, creciente.
        ber (Sequence[float]): BER en cada punto.
        target (float): BER objetivo (> 0).

    Returns:
        float | None: SNR interpolada, o None si el objetivo no queda acotado.
    """
    if target <= 0:
        return None
    x = np.asarray(snr_db, dtype=float)
    y = np.asarray(ber, dtype=float)
    validos = y > 0
    x, y = x[validos], np.log10(y[validos])
    objetivo = np.log10(target)

    for i in range(len(x) - 1):
        alto, bajo = y[i], y[i + 1]
        if alto >= objetivo >= bajo:
            if alto == bajo:
                return float(x[i])
            fraccion = (alto - objetivo) / (alto - bajo)
            return float(x[i] + fraccion * (x[i + 1] - x[i]))
    if len(x) == 1 and y[0] == objetivo:
        return float(x[0])
    return None


def snr_gap_db(reference_curve, improved_curve, target):
    """
    Ganancia en SNR de una curva respecto a otra a una BER dada.

    Args:
        reference_curve (tuple): (snr_db, ber) del sistema de referencia.
        improved_curve (tuple): (snr_db, ber) del sistema comparado.
        target (float): BER objetivo.

    Returns:
        float | None: SNR_referencia − SNR_comparado (positiva si el comparado
        necesita menos SNR), o None si alguna curva no alcanza el objetivo.
    """
    referencia = snr_at_ber(*reference_curve, target)
    mejorada = snr_at_ber(*improved_curve, target)
    if referencia is None or mejorada is None:
        return None
    return referencia - mejorada


def monotone_within_ci(records):
    """
    True si la BER no crece entre puntos consecutivos más allá de sus
    intervalos de confianza.

    Args:
        records (Sequence[BerRecord]): Registros en orden de SNR.
    """
    for anterior, siguiente in zip(records, records[1:]):
        if siguiente.ci_lo > anterior.ci_hi:
            return False
    return True
