"""
Gestor de configuración de los experimentos.

Este módulo combina, por orden de prioridad creciente, los valores por
defecto, un preset, un archivo de configuración (TOML o JSON) y los valores
de la línea de comandos, y produce un SimConfig validado.

Clases:
    ConfigManager: Clase para gestionar la configuración de un experimento.
"""

import copy
import json
import logging
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from pathlib import Path

from utils.errors import ConfigError

LOGGER = logging.getLogger(__name__)


class ConfigManager:
    """
    Clase para gestionar la configuración de un experimento.

    Las claves son planas (system, selection, M, n_R, ...). Los valores None
    significan "valor por defecto del sistema" y se resuelven al construir
    el SimConfig.

    Attributes:
        config_file (str): Último archivo cargado, si lo hay.
        config (dict): Diccionario con la configuración actual.
    """

    DEFAULT_CONFIG = {
        "system": "AS-RIS-RSM",
        "selection": None,
        "detector": "ml",
        "modulation": None,
        "M": 4,
        "n_R": None,
        "n_S": None,
        "N": 32,
        "Es": 1.0,
        "snr_grid_db": "0:30:2",
        "seed": 0,
        "min_bit_errors": 200,
        "max_trials": 10 ** 8,
        "batch_size": 10 ** 4,
        "workers": 1,
        "noiseless": False,
        "n_channel": 2000,
        "subset_cap": 10 ** 6,
    }

    # Tablas anidadas admitidas en los archivos y sus claves
    SECCIONES = {
        "stop": ("min_bit_errors", "max_trials", "batch_size"),
    }

    def __init__(self, config_file=None, preset=None):
        """
        Inicializa el gestor de configuración.

        Args:
            config_file (str, optional): Archivo de configuración a cargar.
            preset (str, optional): Preset a aplicar antes del archivo.
        """
        self.config_file = None
        self.config = copy.deepcopy(self.DEFAULT_CONFIG)
        if preset:
            self.apply_preset(preset)
        if config_file:
            self.load_config(config_file)

    def apply_preset(self, nombre):
        """
        Aplica los valores de un preset sobre la configuración actual.

        Raises:
            ConfigError: Si el preset no existe.
        """
        from simulation.presets import get_preset

        self._update_nested_dict(self.config, get_preset(nombre))
        self.config["preset"] = nombre
        LOGGER.debug("Preset aplicado: %s", nombre)

    def _leer_archivo(self, ruta):
        try:
            if ruta.suffix.lower() == ".toml":
                with open(ruta, "rb") as f:
                    return tomllib.load(f)
            with open(ruta, "r", encoding="utf-8") as f:
                return json.load(f)
        except FileNotFoundError:
            raise ConfigError(f"No existe el archivo de configuración: {ruta}")
        except (OSError, tomllib.TOMLDecodeError, json.JSONDecodeError) as e:
            raise ConfigError(f"Error al cargar la configuración {ruta}: {e}") from e

    def _aplanar(self, datos):
        if not isinstance(datos, dict):
            raise ConfigError("El archivo de configuración debe contener una tabla de claves")
        plano = {}
        for clave, valor in datos.items():
            if isinstance(valor, dict):
                if clave not in self.SECCIONES:
                    raise ConfigError(f"Sección desconocida en la configuración: [{clave}]")
                for subclave, subvalor in valor.items():
                    if subclave not in self.SECCIONES[clave]:
                        raise ConfigError(f"Clave desconocida en [{clave}]: {subclave}")
                    plano[subclave] = subvalor
            else:
                plano[clave] = valor
        return plano

    def load_config(self, config_file):
        """
        Carga un archivo de configuración TOML (.toml) o JSON.

        Si el archivo indica un preset, el preset se aplica primero y los
        valores del archivo lo sobrescriben.

        Args:
            config_file (str | Path): Ruta del archivo.

        Raises:
            ConfigError: Si el archivo no existe, no se puede leer o tiene
                claves desconocidas.
        """
        ruta = Path(config_file)
        datos = self._aplanar(self._leer_archivo(ruta))

        desconocidas = set(datos) - set(self.DEFAULT_CONFIG) - {"preset", "es"}
        if desconocidas:
            raise ConfigError(f"Claves desconocidas en {ruta}: {', '.join(sorted(desconocidas))}")

        if "preset" in datos:
            self.apply_preset(datos.pop("preset"))
        if "es" in datos:
            datos["Es"] = datos.pop("es")
        self._update_nested_dict(self.config, datos)
        self.config_file = str(ruta)
        LOGGER.info("Configuración cargada desde %s", ruta)

    def update(self, valores):
        """
        Sobrescribe la configuración con los valores no nulos de un diccionario
        (por ejemplo, los argumentos de la línea de comandos).
        """
        self._update_nested_dict(self.config, {k: v for k, v in valores.items() if v is not None})

    def get_config(self, key=None):
        """
        Obtiene la configuración o un valor específico.

        Args:
            key (str, optional): Clave, con puntos para tablas anidadas. Si es
                None, se devuelve toda la configuración.

        Returns:
            dict or any: Configuración completa o valor específico.
        """
        if key is None:
            return self.config

        value = self.config
        try:
            for k in key.split("."):
                value = value[k]
            return value
        except (KeyError, TypeError):
            return None

    def set_config(self, key, value):
        """
        Establece un valor de configuración.

        Args:
            key (str): Clave, con puntos para tablas anidadas.
            value (any): Valor a establecer.
        """
        keys = key.split(".")
        config = self.config
        for k in keys[:-1]:
            config = config.setdefault(k, {})
        config[keys[-1]] = value

    def save_config(self, config_file):
        """
        Guarda la configuración actual en JSON.

        Args:
            config_file (str | Path): Ruta de destino.
        """
        with open(config_file, "w", encoding="utf-8", newline="\n") as f:
            json.dump(self.config, f, indent=4, ensure_ascii=False)
            f.write("\n")
        LOGGER.info("Configuración guardada en %s", config_file)

    def reset_config(self):
        """Restablece la configuración a los valores por defecto."""
        self.config = copy.deepcopy(self.DEFAULT_CONFIG)
        self.config_file = None

    def to_sim_config(self):
        """
        Valida la configuración y devuelve el SimConfig correspondiente.

        Raises:
            ConfigError: Si algún valor es inválido.
        """
        from simulation.sim_config import SimConfig

        return SimConfig.from_dict(self.config)

    def _update_nested_dict(self, d, u):
        """
        Actualiza un diccionario anidado con otro diccionario.

        Args:
            d (dict): Diccionario a actualizar.
            u (dict): Diccionario con los nuevos valores.

        Returns:
            dict: Diccionario actualizado.
        """
        for k, v in u.items():
            if isinstance(v, dict) and k in d and isinstance(d[k], dict):
                self._update_nested_dict(d[k], v)
            else:
                d[k] = v
        return d
