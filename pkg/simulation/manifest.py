"""
Registros de resultados y manifiesto reproducible de una ejecución.

Clases:
    BerRecord: Resultado de un punto de SNR.
    RunManifest: Configuración, versión, fecha y registros de una ejecución.
"""

import dataclasses
import datetime
import json
import logging
from pathlib import Path

from utils.errors import ConfigError

LOGGER = logging.getLogger(__name__)

SOFTWARE_VERSION = "1.0.0"


@dataclasses.dataclass(frozen=True)
class BerRecord:
    """
    BER medida en un punto de SNR.

    Attributes:
        snr_db (float): SNR en dB.
        trials (int): Tramas simuladas.
        bit_errors (int): Bits erróneos.
        ber (float): bit_errors / (trials·η).
        ci_lo (float): Límite inferior del intervalo de Wilson al 95 %.
        ci_hi (float): Límite superior del intervalo de Wilson al 95 %.
        wall_time_s (float): Tiempo de cálculo del punto.
    """

    snr_db: float
    trials: int
    bit_errors: int
    ber: float
    ci_lo: float
    ci_hi: float
    wall_time_s: float = 0.0

    def results(self):
        """Campos deterministas del registro (sin el tiempo de cálculo)."""
        datos = dataclasses.asdict(self)
        datos.pop("wall_time_s")
        return datos


@dataclasses.dataclass
class RunManifest:
    """
    Manifiesto de una ejecución.

    Volver a ejecutar la configuración guardada con la misma semilla
    reproduce exactamente todos los registros.

    Attributes:
        config (dict): Configuración completa (SimConfig.to_dict()).
        fingerprint (str): Huella SHA-256 de la configuración.
        seed (int): Semilla del experimento.
        software_version (str): Versión del simulador.
        timestamp (str): Fecha ISO 8601 en UTC.
        records (list): BerRecord por punto de la malla.
        aber (list): Estimaciones de la cota de unión, si se calcularon.
    """

    config: dict
    fingerprint: str
    seed: int
    software_version: str = SOFTWARE_VERSION
    timestamp: str = ""
    records: list = dataclasses.field(default_factory=list)
    aber: list = dataclasses.field(default_factory=list)

    def __post_init__(self):
        if not self.timestamp:
            self.timestamp = datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")

    def to_dict(self):
        return {
            "config": self.config,
            "fingerprint": self.fingerprint,
            "seed": self.seed,
            "software_version": self.software_version,
            "timestamp": self.timestamp,
            "records": [dataclasses.asdict(r) for r in self.records],
            "aber": [dataclasses.asdict(a) for a in self.aber],
        }

    def to_json(self, path):
        """
        Guarda el manifiesto en JSON (UTF-8, finales de línea LF).

        Args:
            path (str | Path): Archivo de destino.
        """
        ruta = Path(path)
        with open(ruta, "w", encoding="utf-8", newline="\n") as f:
            json.dump(self.to_dict(), f, indent=2, ensure_ascii=False)
            f.write("\n")
        LOGGER.info("Manifiesto guardado en %s", ruta)

    @classmethod
    def from_dict(cls, datos):
        from analysis.aber_analysis import AberEstimate

        try:
            return cls(
                config=dict(datos["config"]),
                fingerprint=datos["fingerprint"],
                seed=int(datos["seed"]),
                software_version=datos.get("software_version", SOFTWARE_VERSION),
                timestamp=datos.get("timestamp", ""),
                records=[BerRecord(**r) for r in datos.get("records", [])],
                aber=[AberEstimate(**a) for a in datos.get("aber", [])],
            )
        except (KeyError, TypeError) as e:
            raise ConfigError(f"Manifiesto inválido: {e}") from e

    @classmethod
    def from_json(cls, path):
        """
        Carga un manifiesto guardado con to_json.

        Raises:
            ConfigError: Si el archivo no existe o no es un manifiesto válido.
        """
        try:
            with open(path, "r", encoding="utf-8") as f:
                datos = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise ConfigError(f"No se pudo leer el manifiesto {path}: {e}") from e
        return cls.from_dict(datos)

    def same_results(self, otro):
        """True si ambos manifiestos tienen los mismos registros deterministas."""
        return [r.results() for r in self.records] == [r.results() for r in otro.records]
