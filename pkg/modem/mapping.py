"""
Correspondencia bits -> (antena, símbolo) del esquema RSM y recuento de errores.

Los primeros log2(n_S) bits de la trama eligen la antena objetivo t y los
últimos log2(M) bits eligen el símbolo q. Con esta convención la trama de
η bits es simplemente la representación binaria de (t-1)·M + (q-1).

Funciones:
    map_bits: Convierte η bits en un FrameSymbol.
    demap: Convierte (t̂, q̂) en η bits.
    count_bit_errors: Distancia de Hamming entre lo enviado y lo detectado.
    frame_bits: Número de bits por trama.
    hamming_matrix: Distancias de Hamming entre todas las hipótesis.
"""

from dataclasses import dataclass

import numpy as np

from utils.errors import IndexOutOfRange, InvalidBits, LengthMismatch
from utils.validation_utils import es_potencia_de_dos


@dataclass(frozen=True)
class FrameSymbol:
    """
    Una transmisión: antena objetivo, símbolo y bits de origen.

    Attributes:
        antenna_index (int): t en [1, n_S].
        symbol_index (int): q en [1, M].
        bits (str): Cadena de η bits.
    """

    antenna_index: int
    symbol_index: int
    bits: str

    @property
    def hypothesis(self):
        """Índice 0-based de la hipótesis, (t-1)·M + (q-1)."""
        return int(self.bits, 2) if self.bits else 0


def _log2(valor, nombre):
    if not es_potencia_de_dos(valor):
        raise IndexOutOfRange(f"{nombre} debe ser potencia de dos (recibido: {valor})")
    return int(valor).bit_length() - 1


def frame_bits(n_s, order):
    """Devuelve η = log2(n_S) + log2(M)."""
    return _log2(n_s, "n_S") + _log2(order, "M")


def map_bits(bits, n_s, order):
    """
    Convierte una cadena de η bits en (t, q).

    Args:
        bits (str | Sequence[int]): Bits de la trama, antena primero.
        n_s (int): Número de antenas seleccionadas.
        order (int): Orden M de la constelación.

    Returns:
        FrameSymbol: Antena y símbolo con índices desde 1.

    Raises:
        LengthMismatch: Si la longitud no es log2(n_S) + log2(M).
        InvalidBits: Si la trama contiene caracteres distintos de 0 y 1.
    """
    if not isinstance(bits, str):
        bits = "".join(str(int(b)) for b in bits)
    if any(c not in "01" for c in bits):
        raise InvalidBits(f"Caracteres no válidos en la trama (solo 0 y 1): {bits!r}")

    bits_antena = _log2(n_s, "n_S")
    bits_simbolo = _log2(order, "M")
    if len(bits) != bits_antena + bits_simbolo:
        raise LengthMismatch(
            f"Se esperaban {bits_antena + bits_simbolo} bits y se recibieron {len(bits)}"
        )

    t = 1 + (int(bits[:bits_antena], 2) if bits_antena else 0)
    q = 1 + (int(bits[bits_antena:], 2) if bits_simbolo else 0)
    return FrameSymbol(antenna_index=t, symbol_index=q, bits=bits)


def demap(t_hat, q_hat, n_s, order):
    """
    Inversa de map_bits.

    Returns:
        str: Cadena de η bits.

    Raises:
        IndexOutOfRange: Si t̂ o q̂ están fuera de rango.
    """
    eta = frame_bits(n_s, order)
    if not 1 <= t_hat <= n_s:
        raise IndexOutOfRange(f"Índice de antena fuera de rango: {t_hat} (n_S={n_s})")
    if not 1 <= q_hat <= order:
        raise IndexOutOfRange(f"Índice de símbolo fuera de rango: {q_hat} (M={order})")
    if eta == 0:
        return ""
    return format((t_hat - 1) * order + (q_hat - 1), f"0{eta}b")


def count_bit_errors(sent, t_hat, q_hat, n_s, order):
    """
    Número de bits erróneos entre la trama enviada y la detectada.

    Args:
        sent (FrameSymbol): Trama transmitida.
        t_hat (int): Antena detectada (1..n_S).
        q_hat (int): Símbolo detectado (1..M).
        n_s (int): Número de antenas seleccionadas.
        order (int): Orden M.

    Returns:
        int: Distancia de Hamming.
    """
    detectados = demap(t_hat, q_hat, n_s, order)
    return sum(a != b for a, b in zip(sent.bits, detectados))


def popcount(valores):
    """Número de unos de cada entero de un arreglo no negativo."""
    valores = np.asarray(valores, dtype=np.uint64)
    cuenta = np.zeros(valores.shape, dtype=np.int64)
    while np.any(valores):
        cuenta += (valores & np.uint64(1)).astype(np.int64)
        valores = valores >> np.uint64(1)
    return cuenta


def hamming_matrix(n_s, order):
    """
    Distancias de Hamming entre las 2^η hipótesis.

    Returns:
        numpy.ndarray: Matriz entera (2^η, 2^η).
    """
    k = np.arange(n_s * order, dtype=np.uint64)
    return popcount(k[:, None] ^ k[None, :])
