"""
Utilidades para la validación de parámetros de simulación.

Este módulo proporciona funciones para validar los valores que llegan desde
archivos de configuración o desde la línea de comandos: números, enteros,
potencias de dos y mallas de SNR.

Funciones:
    validar_numero: Valida un valor numérico.
    validar_entero: Valida un valor entero.
    validar_potencia_de_dos: Valida que un entero sea potencia de dos.
    validar_malla_snr: Convierte y valida una malla de SNR en dB.
    es_potencia_de_dos: Indica si un entero es potencia de dos.
"""

import math

import numpy as np

from utils.errors import ConfigError


def es_potencia_de_dos(valor):
    """
    Indica si un entero positivo es potencia de dos.

    Args:
        valor (int): Valor a comprobar.

    Returns:
        bool: True si valor = 2^k para algún k >= 0.
    """
    return isinstance(valor, (int, np.integer)) and valor > 0 and (valor & (valor - 1)) == 0


def validar_numero(valor, nombre="valor", min_val=None, max_val=None):
    """
    Valida un valor numérico.

    Args:
        valor: El valor a validar (número o cadena).
        nombre (str): Nombre del parámetro para los mensajes de error.
        min_val (float, optional): Valor mínimo permitido.
        max_val (float, optional): Valor máximo permitido.

    Returns:
        float: El valor numérico validado.

    Raises:
        ConfigError: Si el valor no es un número finito o está fuera de los límites.
    """
    try:
        num = float(valor)
    except (TypeError, ValueError):
        raise ConfigError(f"{nombre} debe ser un número (recibido: {valor!r})")

    if not math.isfinite(num):
        raise ConfigError(f"{nombre} debe ser finito")

    if min_val is not None and num < min_val:
        raise ConfigError(f"{nombre} debe ser mayor o igual a {min_val}")

    if max_val is not None and num > max_val:
        raise ConfigError(f"{nombre} debe ser menor o igual a {max_val}")

    return num


def validar_entero(valor, nombre="valor", min_val=None, max_val=None):
    """
    Valida un valor entero.

    Acepta enteros, cadenas con dígitos y flotantes sin parte decimal
    (por ejemplo 1e8 escrito en un archivo TOML).

    Raises:
        ConfigError: Si el valor no es entero o está fuera de los límites.
    """
    if isinstance(valor, bool):
        raise ConfigError(f"{nombre} debe ser un entero")
    try:
        if isinstance(valor, str):
            valor = float(valor) if any(c in valor for c in ".eE") else int(valor)
        if isinstance(valor, float):
            if not valor.is_integer():
                raise ValueError
            valor = int(valor)
        num = int(valor)
    except (TypeError, ValueError, OverflowError):
        raise ConfigError(f"{nombre} debe ser un entero (recibido: {valor!r})")

    if min_val is not None and num < min_val:
        raise ConfigError(f"{nombre} debe ser mayor o igual a {min_val}")
    if max_val is not None and num > max_val:
        raise ConfigError(f"{nombre} debe ser menor o igual a {max_val}")
    return num


def validar_potencia_de_dos(valor, nombre="valor"):
    """
    Valida que un entero sea potencia de dos.

    Returns:
        int: El entero validado.

    Raises:
        ConfigError: Si no es potencia de dos.
    """
    num = validar_entero(valor, nombre, min_val=1)
    if not es_potencia_de_dos(num):
        raise ConfigError(f"{nombre} debe ser potencia de dos (recibido: {num})")
    return num


def validar_malla_snr(malla):
    """
    Convierte y valida una malla de SNR en dB.

    Se aceptan listas de números, cadenas separadas por comas ("0,5,10")
    o rangos "inicio:fin:paso" con el extremo final incluido ("0:30:2.5").

    Args:
        malla: Lista, tupla o cadena con la malla.

    Returns:
        tuple: Valores de SNR en dB, estrictamente crecientes.

    Raises:
        ConfigError: Si la malla no es numérica o no es estrictamente creciente.
    """
    if malla is None:
        return ()

    if isinstance(malla, str):
        texto = malla.strip()
        if not texto:
            return ()
        if ":" in texto:
            partes = texto.split(":")
            if len(partes) != 3:
                raise ConfigError("El rango de SNR debe tener la forma inicio:fin:paso")
            inicio, fin, paso = (validar_numero(p, "snr_grid_db") for p in partes)
            if paso <= 0:
                raise ConfigError("El paso de la malla de SNR debe ser positivo")
            n_puntos = int(math.floor((fin - inicio) / paso + 1e-9)) + 1
            valores = [round(inicio + i * paso, 10) for i in range(max(n_puntos, 0))]
        else:
            valores = [validar_numero(p, "snr_grid_db") for p in texto.split(",") if p.strip()]
    else:
        valores = [validar_numero(v, "snr_grid_db") for v in malla]

    # La malla debe ser estrictamente creciente
    for anterior, siguiente in zip(valores, valores[1:]):
        if siguiente <= anterior:
            raise ConfigError("La malla de SNR debe ser estrictamente creciente")

    return tuple(float(v) for v in valores)
