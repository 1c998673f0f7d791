"""
Exportación de resultados a CSV y Excel.

Los CSV tienen cabecera obligatoria, codificación UTF-8 y finales de línea
LF. No incluyen tiempos de cálculo, de modo que dos ejecuciones con la misma
semilla producen archivos idénticos byte a byte.

Funciones:
    records_frame: Tabla de registros de BER de un manifiesto.
    export_csv: Guarda una tabla en CSV.
    export_excel: Guarda metadatos y resultados en un libro de Excel.
"""

import logging

import pandas as pd

LOGGER = logging.getLogger(__name__)

# Columnas del CSV de registros de BER
BER_COLUMNS = [
    "system", "selection", "detector", "M", "n_R", "n_S", "N",
    "snr_db", "trials", "bit_errors", "ber", "ci_lo", "ci_hi", "seed",
]


def records_frame(manifest):
    """
    Construye la tabla de registros de BER de un manifiesto.

    Args:
        manifest (RunManifest): Manifiesto de una ejecución.

    Returns:
        pandas.DataFrame: Una fila por punto de SNR con las columnas BER_COLUMNS.
    """
    cfg = manifest.config
    filas = []
    for r in manifest.records:
        filas.append({
            "system": cfg["system"],
            "selection": cfg["selection"],
            "detector": cfg["detector"],
            "M": cfg["M"],
            "n_R": cfg["n_R"],
            "n_S": cfg["n_S"],
            "N": cfg["N"],
            "snr_db": r.snr_db,
            "trials": r.trials,
            "bit_errors": r.bit_errors,
            "ber": r.ber,
            "ci_lo": r.ci_lo,
            "ci_hi": r.ci_hi,
            "seed": manifest.seed,
        })
    return pd.DataFrame(filas, columns=BER_COLUMNS)


def export_csv(df, filename):
    """
    Guarda una tabla en CSV (UTF-8, LF, con cabecera).

    Args:
        df (pandas.DataFrame): Datos.
        filename (str | Path): Archivo de destino.
    """
    df.to_csv(filename, index=False, encoding="utf-8", lineterminator="\n")
    LOGGER.info("Datos exportados a %s", filename)


def export_excel(df, filename, metadatos):
    """
    Guarda un libro de Excel con una hoja 'Metadatos' y otra 'Resultados'.

    Args:
        df (pandas.DataFrame): Resultados.
        filename (str | Path): Archivo .xlsx de destino.
        metadatos (dict): Pares parámetro/valor para la primera hoja.
    """
    with pd.ExcelWriter(filename, engine="openpyxl") as writer:
        pd.DataFrame({
            "Parámetro": list(metadatos.keys()),
            "Valor": [str(v) for v in metadatos.values()],
        }).to_excel(writer, sheet_name="Metadatos", index=False)
        df.to_excel(writer, sheet_name="Resultados", index=False)
    LOGGER.info("Datos exportados a %s", filename)

