"""Configuración del registro (logging) de la aplicación."""

import logging
import sys

FORMATO = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def configurar_logging(verbosidad=0):
    """
    Configura un único manejador sobre stderr.

    Llamadas repetidas sustituyen el manejador anterior instalado por esta
    función; los manejadores ajenos se conservan.

    Args:
        verbosidad (int): -1 solo avisos, 0 información, 1 o más depuración.
    """
    if verbosidad < 0:
        nivel = logging.WARNING
    elif verbosidad == 0:
        nivel = logging.INFO
    else:
        nivel = logging.DEBUG

    raiz = logging.getLogger()
    for manejador in list(raiz.handlers):
        if getattr(manejador, "_ris_rsm", False):
            raiz.removeHandler(manejador)

    manejador = logging.StreamHandler(sys.stderr)
    manejador.setFormatter(logging.Formatter(FORMATO))
    manejador._ris_rsm = True
    raiz.addHandler(manejador)
    raiz.setLevel(nivel)
