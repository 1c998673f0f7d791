"""
Utilidades del simulador: errores, validación, configuración, registro,
exportación y gráficas.
"""

from utils.config_manager import ConfigManager
from utils.errors import (
    ConfigError,
    DimensionError,
    DivisionByZero,
    IndexOutOfRange,
    InvalidBits,
    InvalidCombination,
    LengthMismatch,
    RisRsmError,
    TooLarge,
    UnsupportedOrder,
)

__all__ = [
    'ConfigManager',
    'RisRsmError',
    'UnsupportedOrder',
    'LengthMismatch',
    'IndexOutOfRange',
    'InvalidBits',
    'DimensionError',
    'TooLarge',
    'InvalidCombination',
    'ConfigError',
    'DivisionByZero',
]
