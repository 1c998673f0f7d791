"""
Utilidades para generar las gráficas de resultados.

Este módulo proporciona funciones para crear y personalizar las curvas de
BER, de capacidad y de complejidad, y para guardarlas en archivo.

Funciones:
    crear_grafica_ber: Curvas de BER en escala semilogarítmica.
    crear_grafica_capacidad: Curvas de capacidad ergódica.
    crear_grafica_complejidad: Barras de complejidad en RM.
    personalizar_grafica: Personaliza el estilo de una gráfica.
    save_plot: Guarda una figura.
"""

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402


def crear_grafica_ber(curvas, titulo="BER frente a SNR", aber=None):
    """
    Crea una gráfica de BER frente a SNR.

    Args:
        curvas (dict): Etiqueta -> lista de BerRecord.
        titulo (str, optional): Título de la gráfica.
        aber (dict, optional): Etiqueta -> lista de AberEstimate (línea discontinua).

    Returns:
        tuple: (fig, ax) donde:
            - fig es la figura de matplotlib
            - ax es el eje de la gráfica
    """
    fig, ax = plt.subplots(figsize=(8, 6))

    for etiqueta, registros in curvas.items():
        # Los puntos sin errores no se representan en escala logarítmica
        puntos = [r for r in registros if r.ber > 0]
        if not puntos:
            continue
        snr = np.array([r.snr_db for r in puntos])
        ber = np.array([r.ber for r in puntos])
        errores = np.array([[r.ber - r.ci_lo for r in puntos], [r.ci_hi - r.ber for r in puntos]])
        ax.errorbar(snr, ber, yerr=errores, marker="o", markersize=4, capsize=2, label=etiqueta)

    for etiqueta, estimaciones in (aber or {}).items():
        puntos = [a for a in estimaciones if a.value > 0]
        if puntos:
            ax.plot([a.snr_db for a in puntos], [a.value for a in puntos], "--", label=f"{etiqueta} (cota)")

    ax.set_yscale("log")
    personalizar_grafica(ax, titulo, "SNR (dB)", "BER")
    return fig, ax


def crear_grafica_capacidad(curvas, titulo="Capacidad ergódica"):
    """
    Crea una gráfica de capacidad frente a SNR.

    Args:
        curvas (dict): Etiqueta -> lista de CapacityRecord.
        titulo (str, optional): Título de la gráfica.

    Returns:
        tuple: (fig, ax)
    """
    fig, ax = plt.subplots(figsize=(8, 6))
    for etiqueta, registros in curvas.items():
        ax.plot(
            [r.snr_db for r in registros],
            [r.bits_per_use for r in registros],
            marker="s", markersize=4, label=etiqueta,
        )
    personalizar_grafica(ax, titulo, "SNR (dB)", "Capacidad (bits/uso)")
    return fig, ax


def crear_grafica_complejidad(tabla, titulo="Complejidad (RM)"):
    """
    Crea un diagrama de barras de la tabla de complejidad.

    Args:
        tabla (pandas.DataFrame): Filas = sistemas, columnas = conjuntos de parámetros.
        titulo (str, optional): Título de la gráfica.

    Returns:
        tuple: (fig, ax)
    """
    fig, ax = plt.subplots(figsize=(10, 6))
    filas = list(tabla.index)
    ancho = 0.8 / max(len(tabla.columns), 1)
    posiciones = np.arange(len(filas))
    for i, columna in enumerate(tabla.columns):
        valores = [float(v) for v in tabla[columna]]
        ax.bar(posiciones + i * ancho, valores, width=ancho, label=str(columna))
    ax.set_xticks(posiciones + ancho * (len(tabla.columns) - 1) / 2)
    ax.set_xticklabels(filas, rotation=45, ha="right")
    ax.set_yscale("log")
    personalizar_grafica(ax, titulo, "", "RM")
    return fig, ax


def personalizar_grafica(ax, titulo, xlabel, ylabel):
    """
    Personaliza el estilo de una gráfica.

    Args:
        ax (matplotlib.axes.Axes): El eje de la gráfica a personalizar.
        titulo (str): Título de la gráfica.
        xlabel (str): Etiqueta del eje x.
        ylabel (str): Etiqueta del eje y.
    """
    ax.set_title(titulo, fontsize=12, pad=15)
    ax.set_xlabel(xlabel, fontsize=10)
    ax.set_ylabel(ylabel, fontsize=10)

    ax.grid(True, which="both", linestyle="--", alpha=0.7)
    if ax.get_legend_handles_labels()[0]:
        ax.legend(loc="best")
    ax.margins(x=0.02, y=0.02)

    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    ax.tick_params(direction="out", length=6, width=1, colors="black")
    ax.tick_params(axis="both", which="minor", length=4, width=1)


def save_plot(fig, filename):
    """
    Guarda la gráfica en un archivo y libera la figura.

    Args:
        fig (matplotlib.figure.Figure): Figura a guardar.
        filename (str): Nombre del archivo (PNG, PDF, ...).
    """
    fig.savefig(filename, dpi=300, bbox_inches="tight")
    plt.close(fig)
