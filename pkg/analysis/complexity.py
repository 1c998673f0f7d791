"""
Complejidad computacional en multiplicaciones reales (RM).

Cada fila (sistema, detector) se guarda como una expresión de sympy en los
símbolos M, n_R, n_S y N, y se evalúa con aritmética exacta de enteros y
racionales. Una multiplicación compleja y un módulo al cuadrado cuentan como
4 RM cada uno.

Clases:
    ComplexitySystem: Sistemas de la tabla de complejidad.
    ComplexityReport: Resultado para un sistema, detector y parámetros.

Funciones:
    complexity_rm, complexity_report, complexity_table
"""

import dataclasses
import enum
import logging

import pandas as pd
import sympy as sp

from detectors.base_detector import DetectorKind
from utils.errors import DimensionError, InvalidCombination, UnsupportedOrder
from utils.validation_utils import es_potencia_de_dos

LOGGER = logging.getLogger(__name__)

M_SYM, NR_SYM, NS_SYM, N_SYM = sp.symbols("M n_R n_S N", positive=True, integer=True)
# log2(M) y log2(n_S) se sustituyen por enteros exactos
LOG2_M, LOG2_NS = sp.symbols("log2_M log2_n_S", positive=True, integer=True)


class ComplexitySystem(enum.Enum):
    RIS_QAM_PSK = "RIS-QAM/PSK"
    RIS_RSM = "RIS-RSM"
    COAS = "COAS-RIS-RSM"
    ACAS = "ACAS-RIS-RSM"
    EDAS = "EDAS-RIS-RSM"

    @classmethod
    def parse(cls, valor):
        if isinstance(valor, cls):
            return valor
        texto = str(valor).upper().replace("_", "-")
        if texto in ("RIS-QAM", "RIS-PSK", "RIS-QAM-PSK"):
            return cls.RIS_QAM_PSK
        for sistema in cls:
            if texto in (sistema.value, sistema.name):
                return sistema
        opciones = ", ".join(s.value for s in cls)
        raise InvalidCombination(f"Sistema no disponible: {valor}. Disponibles: {opciones}")


# Coste de cada detector sobre las n_S antenas usadas
DETECTOR_RM = {
    DetectorKind.ML: (N_SYM + M_SYM) * NS_SYM ** 2,
    DetectorKind.GREEDY: M_SYM + NS_SYM,
}

# Coste de la selección de antenas por canal
SELECTION_RM = {
    ComplexitySystem.RIS_RSM: sp.Integer(0),
    ComplexitySystem.COAS: 4 * N_SYM * NR_SYM,
    ComplexitySystem.ACAS: (12 * N_SYM + 1) * sp.binomial(NR_SYM, NS_SYM) * sp.binomial(NS_SYM, 2),
    ComplexitySystem.EDAS: 4 * N_SYM * (M_SYM - 1) * sp.binomial(NR_SYM, NS_SYM) * sp.binomial(NS_SYM, 2),
}

QAM_PSK_ML_RM = (N_SYM + M_SYM) * (1 + LOG2_NS / LOG2_M)

# Orden de las filas de la tabla
TABLE_ROWS = [
    (ComplexitySystem.RIS_QAM_PSK, DetectorKind.ML),
    (ComplexitySystem.RIS_RSM, DetectorKind.ML),
    (ComplexitySystem.RIS_RSM, DetectorKind.GREEDY),
    (ComplexitySystem.COAS, DetectorKind.ML),
    (ComplexitySystem.COAS, DetectorKind.GREEDY),
    (ComplexitySystem.ACAS, DetectorKind.ML),
    (ComplexitySystem.ACAS, DetectorKind.GREEDY),
    (ComplexitySystem.EDAS, DetectorKind.ML),
    (ComplexitySystem.EDAS, DetectorKind.GREEDY),
]


@dataclasses.dataclass(frozen=True)
class ComplexityReport:
    """
    Número de RM de un sistema con un detector.

    Attributes:
        system (ComplexitySystem): Sistema.
        detector (DetectorKind): Detector.
        rm_count (int): Multiplicaciones reales (entero exacto).
        parameters (dict): M, n_R, n_S y N usados.
    """

    system: ComplexitySystem
    detector: DetectorKind
    rm_count: int
    parameters: dict


def complexity_expression(system, detector):
    """
    Expresión simbólica de una fila de la tabla.

    Raises:
        InvalidCombination: Si la combinación no tiene fórmula (RIS-QAM/PSK con detector voraz).
    """
    system = ComplexitySystem.parse(system)
    detector = DetectorKind.parse(detector)
    if system is ComplexitySystem.RIS_QAM_PSK:
        if detector is not DetectorKind.ML:
            raise InvalidCombination("RIS-QAM/PSK solo tiene fórmula de complejidad para el detector ML")
        return QAM_PSK_ML_RM
    return SELECTION_RM[system] + DETECTOR_RM[detector]


def _validar_parametros(m, n_r, n_s, n):
    if not es_potencia_de_dos(m) or m < 2:
        raise UnsupportedOrder(f"M debe ser potencia de dos >= 2 (recibido: {m})")
    if not es_potencia_de_dos(n_s):
        raise DimensionError(f"n_S debe ser potencia de dos (recibido: {n_s})")
    if not 1 <= n_s <= n_r:
        raise DimensionError(f"Se requiere 1 <= n_S <= n_R (n_R={n_r}, n_S={n_s})")
    if n < 1:
        raise DimensionError("N debe ser al menos 1")


def complexity_rm(system, detector, M, n_R, n_S, N):
    """
    Multiplicaciones reales de un sistema con un detector.

    Args:
        system (str | ComplexitySystem): Sistema.
        detector (str | DetectorKind): 'ml' o 'greedy'.
        M (int): Orden de la constelación.
        n_R (int): Antenas receptoras.
        n_S (int): Antenas seleccionadas.
        N (int): Elementos de la RIS.

    Returns:
        int: Número exacto de RM.

    Raises:
        InvalidCombination: Para RIS-QAM/PSK con detector voraz.
        DimensionError: Si los parámetros no son válidos.
    """
    expresion = complexity_expression(system, detector)
    m, n_r, n_s, n = (int(v) for v in (M, n_R, n_S, N))
    _validar_parametros(m, n_r, n_s, n)

    valores = {
        M_SYM: m,
        NR_SYM: n_r,
        NS_SYM: n_s,
        N_SYM: n,
        LOG2_M: m.bit_length() - 1,
        LOG2_NS: n_s.bit_length() - 1,
    }
    resultado = expresion.subs(valores)
    if not resultado.is_integer:
        # La fórmula de RIS-QAM/PSK no siempre es entera; se redondea hacia arriba
        LOGGER.warning("Complejidad no entera (%s); se redondea hacia arriba", resultado)
        resultado = sp.ceiling(resultado)
    return int(resultado)


def complexity_report(system, detector, M, n_R, n_S, N):
    """Igual que complexity_rm pero devuelve un ComplexityReport."""
    return ComplexityReport(
        system=ComplexitySystem.parse(system),
        detector=DetectorKind.parse(detector),
        rm_count=complexity_rm(system, detector, M, n_R, n_S, N),
        parameters={"M": int(M), "n_R": int(n_R), "n_S": int(n_S), "N": int(N)},
    )


def parameter_label(params):
    return f"M={params['M']},nR={params['n_R']},nS={params['n_S']},N={params['N']}"


def complexity_table(parameter_sets):
    """
    Tabla de complejidad: una fila por (sistema, detector) y una columna por
    conjunto de parámetros.

    Args:
        parameter_sets (list | dict): Diccionarios con M, n_R, n_S y N; si es
            un dict, sus claves se usan como nombres de columna.

    Returns:
        pandas.DataFrame: Enteros exactos.
    """
    if isinstance(parameter_sets, dict):
        conjuntos = list(parameter_sets.items())
    else:
        conjuntos = [(parameter_label(p), p) for p in parameter_sets]

    filas = [f"{s.value} {d.name}" for s, d in TABLE_ROWS]
    tabla = pd.DataFrame(index=pd.Index(filas, name="system"))
    for nombre, p in conjuntos:
        tabla[nombre] = [
            complexity_rm(s, d, p["M"], p["n_R"], p["n_S"], p["N"]) for s, d in TABLE_ROWS
        ]
    return tabla
