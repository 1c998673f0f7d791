"""
Configuración inmutable de un experimento de simulación.

Clases:
    System: Sistemas comparados (RIS-QAM, RIS-PSK, RIS-RSM, AS-RIS-RSM).
    SimConfig: Parámetros validados de un experimento.

Funciones:
    fingerprint: Huella SHA-256 de un diccionario de configuración.
"""

import dataclasses
import enum
import hashlib
import json

from detectors.base_detector import DetectorKind
from modem.constellation import MAX_ORDER, ModulationKind, build_constellation
from selection.base_selector import SelectionMethod
from selection.subsets import DEFAULT_SUBSET_CAP, MAX_ANTENNAS
from utils.errors import ConfigError, RisRsmError
from utils.validation_utils import (
    es_potencia_de_dos,
    validar_entero,
    validar_malla_snr,
    validar_numero,
    validar_potencia_de_dos,
)

MAX_SEED = 2 ** 64 - 1


class System(enum.Enum):
    RIS_QAM = "RIS-QAM"
    RIS_PSK = "RIS-PSK"
    RIS_RSM = "RIS-RSM"
    AS_RIS_RSM = "AS-RIS-RSM"

    @classmethod
    def parse(cls, valor):
        if isinstance(valor, cls):
            return valor
        texto = str(valor).upper().replace("_", "-")
        for sistema in cls:
            if sistema.value == texto:
                return sistema
        opciones = ", ".join(s.value for s in cls)
        raise ConfigError(f"Sistema no disponible: {valor}. Disponibles: {opciones}")

    @property
    def is_baseline(self):
        """True para los sistemas de referencia sin bits de índice."""
        return self in (System.RIS_QAM, System.RIS_PSK)


def fingerprint(datos):
    """
    Huella SHA-256 del JSON canónico (claves ordenadas) de un diccionario.

    Args:
        datos (dict): Configuración serializable.

    Returns:
        str: Resumen hexadecimal.
    """
    canonico = json.dumps(datos, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonico.encode("utf-8")).hexdigest()


def _enum(parse, valor, nombre):
    try:
        return parse(valor)
    except RisRsmError as e:
        raise ConfigError(f"{nombre}: {e}") from e


@dataclasses.dataclass(frozen=True)
class SimConfig:
    """
    Parámetros validados de un experimento.

    Para RIS-QAM/RIS-PSK el receptor tiene una sola antena (n_R = n_S = 1) y
    los η bits van al símbolo; para RIS-RSM se usan todas las antenas
    (n_S = n_R) sin selección.

    Attributes:
        system (System): Sistema simulado.
        selection (SelectionMethod): Técnica de selección de antenas.
        detector (DetectorKind): Detector del receptor.
        modulation (ModulationKind): Tipo de constelación.
        M (int): Orden de la constelación.
        n_R (int): Antenas receptoras.
        n_S (int): Antenas seleccionadas.
        N (int): Elementos de la RIS.
        es (float): Energía de símbolo.
        snr_grid_db (tuple): Malla de SNR en dB.
        seed (int): Semilla de 64 bits.
        min_bit_errors (int): Errores de bit para detener un punto.
        max_trials (int): Tramas máximas por punto.
        batch_size (int): Tramas por lote.
        workers (int): Procesos de trabajo.
        noiseless (bool): Fuerza N0 = 0 (depuración).
        n_channel (int): Realizaciones de canal para ABER y capacidad.
        subset_cap (int): Límite de subconjuntos para ACAS/EDAS.
    """

    system: System = System.AS_RIS_RSM
    selection: SelectionMethod = SelectionMethod.COAS
    detector: DetectorKind = DetectorKind.ML
    modulation: ModulationKind = ModulationKind.QAM
    M: int = 4
    n_R: int = 8
    n_S: int = 2
    N: int = 32
    es: float = 1.0
    snr_grid_db: tuple = ()
    seed: int = 0
    min_bit_errors: int = 200
    max_trials: int = 10 ** 8
    batch_size: int = 10 ** 4
    workers: int = 1
    noiseless: bool = False
    n_channel: int = 2000
    subset_cap: int = DEFAULT_SUBSET_CAP

    def __post_init__(self):
        self._validar()

    # Paso 1: validación conjunta de los parámetros
    def _validar(self):
        if self.system.is_baseline:
            if self.n_R != 1 or self.n_S != 1:
                raise ConfigError(f"{self.system.value}: se requiere n_R = n_S = 1")
            if self.selection is not SelectionMethod.NONE:
                raise ConfigError(f"{self.system.value}: no admite selección de antenas")
            if self.detector is not DetectorKind.ML:
                raise ConfigError(f"{self.system.value}: solo admite el detector ML")
            esperado = ModulationKind.PSK if self.system is System.RIS_PSK else ModulationKind.QAM
            if self.modulation is not esperado:
                raise ConfigError(f"{self.system.value}: la modulación debe ser {esperado.value}")
        elif self.system is System.RIS_RSM:
            if self.selection is not SelectionMethod.NONE:
                raise ConfigError("RIS-RSM: no admite selección de antenas")
            if self.n_S != self.n_R:
                raise ConfigError("RIS-RSM: se requiere n_S = n_R")
        else:
            if not 1 <= self.n_S <= self.n_R:
                raise ConfigError(f"AS-RIS-RSM: se requiere n_S <= n_R (n_R={self.n_R}, n_S={self.n_S})")
            if self.selection is SelectionMethod.NONE and self.n_S != self.n_R:
                raise ConfigError("AS-RIS-RSM sin selección requiere n_S = n_R")
            if self.selection is SelectionMethod.ACAS and self.n_S < 2:
                raise ConfigError("ACAS requiere n_S >= 2")

        if not es_potencia_de_dos(self.n_S):
            raise ConfigError(f"n_S debe ser potencia de dos (recibido: {self.n_S})")
        if not es_potencia_de_dos(self.M) or not 2 <= self.M <= MAX_ORDER:
            raise ConfigError(f"M debe ser potencia de dos entre 2 y {MAX_ORDER} (recibido: {self.M})")
        if self.n_R > MAX_ANTENNAS:
            raise ConfigError(f"n_R no puede superar {MAX_ANTENNAS}")
        if self.N < 1:
            raise ConfigError("N debe ser al menos 1")
        if self.es <= 0:
            raise ConfigError("Es debe ser positiva")
        for anterior, siguiente in zip(self.snr_grid_db, self.snr_grid_db[1:]):
            if siguiente <= anterior:
                raise ConfigError("La malla de SNR debe ser estrictamente creciente")
        if not 0 <= self.seed <= MAX_SEED:
            raise ConfigError("La semilla debe ser un entero de 64 bits sin signo")
        for nombre in ("min_bit_errors", "max_trials", "batch_size", "workers", "n_channel", "subset_cap"):
            if getattr(self, nombre) < 1:
                raise ConfigError(f"{nombre} debe ser al menos 1")

    @property
    def eta(self):
        """Bits por trama η = log2(n_S) + log2(M)."""
        return (self.n_S.bit_length() - 1) + (self.M.bit_length() - 1)

    def constellation(self):
        return build_constellation(self.modulation, self.M)

    @classmethod
    def from_dict(cls, datos):
        """
        Construye una configuración a partir de un diccionario plano.

        Las claves desconocidas se ignoran y los valores None equivalen a
        claves ausentes; los valores se validan con las funciones de
        utils.validation_utils.

        Args:
            datos (dict): Valores de configuración.

        Returns:
            SimConfig: Configuración validada.

        Raises:
            ConfigError: Si algún valor es inválido.
        """
        datos = {k: v for k, v in datos.items() if v is not None}
        sistema = _enum(System.parse, datos.get("system", cls.system), "system")
        # Los sistemas de referencia no seleccionan antenas salvo que se pida explícitamente
        por_defecto = cls.selection if sistema is System.AS_RIS_RSM else SelectionMethod.NONE
        seleccion = _enum(SelectionMethod.parse, datos.get("selection") or por_defecto, "selection")

        modulacion = datos.get("modulation")
        if sistema is System.RIS_PSK:
            modulacion = ModulationKind.PSK if modulacion is None else modulacion
        modulacion = _enum(ModulationKind.parse, modulacion or ModulationKind.QAM, "modulation")

        M = validar_potencia_de_dos(datos.get("M", cls.M), "M")
        if sistema.is_baseline:
            n_r = validar_entero(datos.get("n_R", 1), "n_R", min_val=1)
            n_s = validar_entero(datos.get("n_S", 1), "n_S", min_val=1)
        else:
            n_r = validar_entero(datos.get("n_R", cls.n_R), "n_R", min_val=1, max_val=MAX_ANTENNAS)
            por_defecto = n_r if sistema is System.RIS_RSM or seleccion is SelectionMethod.NONE else cls.n_S
            n_s = validar_potencia_de_dos(datos.get("n_S", por_defecto), "n_S")

        return cls(
            system=sistema,
            selection=seleccion,
            detector=_enum(DetectorKind.parse, datos.get("detector", cls.detector), "detector"),
            modulation=modulacion,
            M=M,
            n_R=n_r,
            n_S=n_s,
            N=validar_entero(datos.get("N", cls.N), "N", min_val=1),
            es=validar_numero(datos.get("Es", datos.get("es", cls.es)), "Es", min_val=0),
            snr_grid_db=validar_malla_snr(datos.get("snr_grid_db")),
            seed=validar_entero(datos.get("seed", cls.seed), "seed", min_val=0, max_val=MAX_SEED),
            min_bit_errors=validar_entero(datos.get("min_bit_errors", cls.min_bit_errors), "min_bit_errors", min_val=1),
            max_trials=validar_entero(datos.get("max_trials", cls.max_trials), "max_trials", min_val=1),
            batch_size=validar_entero(datos.get("batch_size", cls.batch_size), "batch_size", min_val=1),
            workers=validar_entero(datos.get("workers", cls.workers), "workers", min_val=1),
            noiseless=bool(datos.get("noiseless", cls.noiseless)),
            n_channel=validar_entero(datos.get("n_channel", cls.n_channel), "n_channel", min_val=1),
            subset_cap=validar_entero(datos.get("subset_cap", cls.subset_cap), "subset_cap", min_val=1),
        )

    def to_dict(self):
        """Diccionario plano y serializable en JSON de la configuración."""
        return {
            "system": self.system.value,
            "selection": self.selection.value,
            "detector": self.detector.value,
            "modulation": self.modulation.value,
            "M": self.M,
            "n_R": self.n_R,
            "n_S": self.n_S,
            "N": self.N,
            "Es": self.es,
            "snr_grid_db": list(self.snr_grid_db),
            "seed": self.seed,
            "min_bit_errors": self.min_bit_errors,
            "max_trials": self.max_trials,
            "batch_size": self.batch_size,
            "workers": self.workers,
            "noiseless": self.noiseless,
            "n_channel": self.n_channel,
            "subset_cap": self.subset_cap,
        }

    def fingerprint(self):
        """
        Huella de la configuración.

        El número de procesos no altera ningún resultado y queda fuera de la huella.
        """
        datos = self.to_dict()
        datos.pop("workers")
        return fingerprint(datos)

    def replace(self, **cambios):
        """Copia validada con los campos indicados sustituidos."""
        return dataclasses.replace(self, **cambios)

    @property
    def label(self):
        """Etiqueta corta para tablas y gráficas (por ejemplo 'EDAS-RIS-RSM ML')."""
        if self.system is System.AS_RIS_RSM and self.selection is not SelectionMethod.NONE:
            nombre = f"{self.selection.name}-RIS-RSM"
        else:
            nombre = self.system.value
        return f"{nombre} {self.detector.name}"
