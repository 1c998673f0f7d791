from detectors.base_detector import BaseDetector, DetectionResult, DetectorKind
from detectors.ml_detector import MLDetector, ml_metrics
from detectors.greedy_detector import GreedyDetector

# Diccionario de detectores disponibles
AVAILABLE_DETECTORS = {
    DetectorKind.ML: MLDetector,
    DetectorKind.GREEDY: GreedyDetector,
}


def get_detector(kind):
    """
    Obtiene una instancia del detector especificado.

    Args:
        kind (str | DetectorKind): 'ml' o 'greedy'.

    Returns:
        BaseDetector: Instancia del detector.

    Raises:
        DimensionError: Si el detector no está disponible.
    """
    return AVAILABLE_DETECTORS[DetectorKind.parse(kind)]()


def get_available_detectors():
    return [k.value for k in AVAILABLE_DETECTORS]


def ml_detect(y, g_s, constellation, es):
    """Detección ML conjunta; devuelve un DetectionResult con índices desde 1."""
    return MLDetector().detect(y, g_s, constellation, es)


def greedy_detect(y, g_s, constellation, es):
    """Detección voraz en dos etapas; devuelve un DetectionResult con índices desde 1."""
    return GreedyDetector().detect(y, g_s, constellation, es)


def detect(y, g_s, constellation, es, detector=DetectorKind.ML):
    """
    Delega en el detector indicado.

    Args:
        y (ReceivedVector | numpy.ndarray): Señal recibida.
        g_s: Submatriz G_S (N x n_S).
        constellation (Constellation): Constelación del sistema.
        es (float): Energía de símbolo.
        detector (str | DetectorKind): Detector a usar.

    Returns:
        DetectionResult: Antena y símbolo estimados.
    """
    return get_detector(detector).detect(y, g_s, constellation, es)


__all__ = [
    'BaseDetector',
    'MLDetector',
    'GreedyDetector',
    'DetectorKind',
    'DetectionResult',
    'AVAILABLE_DETECTORS',
    'get_detector',
    'get_available_detectors',
    'ml_detect',
    'greedy_detect',
    'ml_metrics',
    'detect',
]
