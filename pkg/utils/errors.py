"""
Excepciones del simulador RIS-RSM.

Todas derivan de RisRsmError y, salvo DivisionByZero, también de ValueError,
de modo que el código que ya captura ValueError sigue funcionando.
"""


class RisRsmError(Exception):
    """Error base del proyecto."""


class UnsupportedOrder(RisRsmError, ValueError):
    """Orden de constelación no soportado (no es potencia de dos)."""


class LengthMismatch(RisRsmError, ValueError):
    """La cadena de bits no tiene la longitud η esperada."""


class InvalidBits(RisRsmError, ValueError):
    """La trama contiene caracteres distintos de 0 y 1."""


class IndexOutOfRange(RisRsmError, ValueError):
    """Índice de antena o de símbolo fuera de rango."""


class DimensionError(RisRsmError, ValueError):
    """Dimensiones incompatibles (por ejemplo n_S > n_R)."""


class TooLarge(RisRsmError, ValueError):
    """La enumeración de subconjuntos supera el límite configurado."""


class InvalidCombination(RisRsmError, ValueError):
    """Combinación sistema/detector sin fórmula de complejidad."""


class ConfigError(RisRsmError, ValueError):
    """Configuración de simulación inválida."""


class DivisionByZero(RisRsmError, ZeroDivisionError):
    """Se pidió una magnitud que exige N0 > 0 con N0 = 0."""
