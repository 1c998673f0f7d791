"""
Configuraciones predefinidas de los experimentos de referencia.

Cada preset es un diccionario plano con las mismas claves que un archivo de
configuración y una descripción. Los valores de un preset se aplican antes
que los del archivo y los de la línea de comandos.

Funciones:
    get_preset: Devuelve una copia de un preset.
    list_presets: Nombres y descripciones de los presets.
"""

import copy

from utils.errors import ConfigError

_MALLA_ETA3 = "0:30:2"
_MALLA_ETA5 = "0:40:2"
_MALLA_CAPACIDAD = "0:30:5"


def _as(seleccion, M, n_R, n_S, N, malla, detector="ml", descripcion=""):
    return {
        "system": "AS-RIS-RSM",
        "selection": seleccion,
        "detector": detector,
        "M": M,
        "n_R": n_R,
        "n_S": n_S,
        "N": N,
        "snr_grid_db": malla,
        "descripcion": descripcion,
    }


def _rsm(M, n_R, N, malla, descripcion=""):
    return {
        "system": "RIS-RSM",
        "selection": "none",
        "M": M,
        "n_R": n_R,
        "n_S": n_R,
        "N": N,
        "snr_grid_db": malla,
        "descripcion": descripcion,
    }


def _referencia(sistema, M, N, malla, descripcion=""):
    return {
        "system": sistema,
        "selection": "none",
        "M": M,
        "n_R": 1,
        "n_S": 1,
        "N": N,
        "snr_grid_db": malla,
        "descripcion": descripcion,
    }


# Presets disponibles
PRESETS = {
    # Comparación con η = 3 bits y N = 32
    "eta3-edas": _as("edas", 4, 8, 2, 32, _MALLA_ETA3, descripcion="EDAS-RIS-RSM, M=4, n_R=8, n_S=2, N=32"),
    "eta3-coas": _as("coas", 4, 8, 2, 32, _MALLA_ETA3, descripcion="COAS-RIS-RSM, M=4, n_R=8, n_S=2, N=32"),
    "eta3-acas": _as("acas", 4, 8, 2, 32, _MALLA_ETA3, descripcion="ACAS-RIS-RSM, M=4, n_R=8, n_S=2, N=32"),
    "eta3-rsm": _rsm(4, 2, 32, _MALLA_ETA3, descripcion="RIS-RSM sin selección, M=4, n_R=2, N=32"),
    "eta3-qam": _referencia("RIS-QAM", 8, 32, _MALLA_ETA3, descripcion="RIS con 8-QAM y una antena, N=32"),
    "eta3-psk": _referencia("RIS-PSK", 8, 32, _MALLA_ETA3, descripcion="RIS con 8-PSK y una antena, N=32"),
    # Comparación con η = 5 bits y N = 16
    "eta5-edas": _as("edas", 8, 8, 4, 16, _MALLA_ETA5, descripcion="EDAS-RIS-RSM, M=8, n_R=8, n_S=4, N=16"),
    "eta5-coas": _as("coas", 8, 8, 4, 16, _MALLA_ETA5, descripcion="COAS-RIS-RSM, M=8, n_R=8, n_S=4, N=16"),
    "eta5-acas": _as("acas", 8, 8, 4, 16, _MALLA_ETA5, descripcion="ACAS-RIS-RSM, M=8, n_R=8, n_S=4, N=16"),
    "eta5-rsm": _rsm(8, 4, 16, _MALLA_ETA5, descripcion="RIS-RSM sin selección, M=8, n_R=4, N=16"),
    "eta5-qam": _referencia("RIS-QAM", 32, 16, _MALLA_ETA5, descripcion="RIS con 32-QAM y una antena, N=16"),
    "eta5-psk": _referencia("RIS-PSK", 32, 16, _MALLA_ETA5, descripcion="RIS con 32-PSK y una antena, N=16"),
    # Escalado con el número de elementos de la RIS, detectores ML y voraz
    "n16-coas": _as("coas", 16, 8, 4, 16, "0:40:2", descripcion="COAS-RIS-RSM, M=16, n_R=8, n_S=4, N=16"),
    "n64-coas": _as("coas", 16, 8, 4, 64, "-20:20:2", descripcion="COAS-RIS-RSM, M=16, n_R=8, n_S=4, N=64"),
    "n16-acas": _as("acas", 8, 8, 4, 16, "0:40:2", descripcion="ACAS-RIS-RSM, M=8, n_R=8, n_S=4, N=16"),
    "n64-acas": _as("acas", 8, 8, 4, 64, "-20:20:2", descripcion="ACAS-RIS-RSM, M=8, n_R=8, n_S=4, N=64"),
    "n16-edas": _as("edas", 8, 4, 2, 16, "0:40:2", descripcion="EDAS-RIS-RSM, M=8, n_R=4, n_S=2, N=16"),
    "n64-edas": _as("edas", 8, 4, 2, 64, "-20:20:2", descripcion="EDAS-RIS-RSM, M=8, n_R=4, n_S=2, N=64"),
    "n128-coas": _as("coas", 16, 16, 4, 128, "-30:10:2", descripcion="COAS-RIS-RSM, M=16, n_R=16, n_S=4, N=128"),
    "n128-acas": _as("acas", 8, 8, 4, 128, "-30:10:2", descripcion="ACAS-RIS-RSM, M=8, n_R=8, n_S=4, N=128"),
    "n128-edas": _as("edas", 8, 4, 2, 128, "-30:10:2", descripcion="EDAS-RIS-RSM, M=8, n_R=4, n_S=2, N=128"),
    # Capacidad ergódica
    "cap-n4-coas": _as("coas", 4, 16, 4, 4, _MALLA_CAPACIDAD, descripcion="Capacidad COAS, n_R=16, n_S=4, N=4"),
    "cap-n16-coas": _as("coas", 4, 16, 4, 16, _MALLA_CAPACIDAD, descripcion="Capacidad COAS, n_R=16, n_S=4, N=16"),
    "cap-n4-acas": _as("acas", 4, 16, 4, 4, _MALLA_CAPACIDAD, descripcion="Capacidad ACAS, n_R=16, n_S=4, N=4"),
    "cap-n16-acas": _as("acas", 4, 16, 4, 16, _MALLA_CAPACIDAD, descripcion="Capacidad ACAS, n_R=16, n_S=4, N=16"),
    "cap-n4-edas": _as("edas", 4, 16, 4, 4, _MALLA_CAPACIDAD, descripcion="Capacidad EDAS, n_R=16, n_S=4, N=4"),
    "cap-n16-edas": _as("edas", 4, 16, 4, 16, _MALLA_CAPACIDAD, descripcion="Capacidad EDAS, n_R=16, n_S=4, N=16"),
    "cap-n4-rsm": _rsm(4, 4, 4, _MALLA_CAPACIDAD, descripcion="Capacidad RIS-RSM, n_R=4, N=4"),
    "cap-n16-rsm": _rsm(4, 4, 16, _MALLA_CAPACIDAD, descripcion="Capacidad RIS-RSM, n_R=4, N=16"),
}


def get_preset(nombre):
    """
    Devuelve una copia de los valores de un preset, sin la descripción.

    Raises:
        ConfigError: Si el preset no existe.
    """
    if nombre not in PRESETS:
        raise ConfigError(f"Preset no disponible: {nombre}. Disponibles: {', '.join(PRESETS)}")
    valores = copy.deepcopy(PRESETS[nombre])
    valores.pop("descripcion", None)
    return valores


def list_presets():
    """
    Nombres y descripciones de los presets.

    Returns:
        list: Pares (nombre, descripción) en orden de definición.
    """
    return [(nombre, datos["descripcion"]) for nombre, datos in PRESETS.items()]
