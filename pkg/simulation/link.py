"""
Cadena de enlace vectorizada: canal, selección, transmisión y detección.

Clases:
    LinkModel: Agrupa la constelación, el selector y el detector de una
        configuración y ejecuta lotes de tramas.
"""

import numpy as np

from channel.rayleigh import complex_noise, effective_gains, sample_channels
from detectors import get_detector
from modem.mapping import popcount
from selection import gather_columns, get_selector

# Tramas por bloque interno; acota la memoria de los tensores del detector ML
CHUNK_TRIALS = 1000


class LinkModel:
    """
    Modelo de enlace de una configuración.

    Todas las realizaciones de un bloque se extraen del generador en el mismo
    orden (canal, hipótesis, ruido), de modo que un mismo generador produce
    siempre el mismo recuento de errores.

    Attributes:
        config (SimConfig): Configuración del experimento.
        constellation (Constellation): Constelación del sistema.
        selector (BaseSelector): Técnica de selección.
        detector (BaseDetector): Detector del receptor.
    """

    def __init__(self, config):
        self.config = config
        self.constellation = config.constellation()
        self.selector = get_selector(config.selection, self.constellation, config.subset_cap)
        self.detector = get_detector(config.detector)

    def draw_channels(self, rng, batch):
        """
        Muestrea canales, aplica la selección y calcula las ganancias efectivas.

        Returns:
            tuple: (g_s, gains) con formas (B, N, n_S) y (B, n_S, n_S).
        """
        cfg = self.config
        g = sample_channels(rng, batch, cfg.N, cfg.n_R)
        indices, _ = self.selector.select_batch(g, cfg.n_S)
        g_s = gather_columns(g, indices)
        return g_s, effective_gains(g_s)

    def run_trials(self, rng, trials, n0):
        """
        Simula un número de tramas y cuenta los bits erróneos.

        Args:
            rng (numpy.random.Generator): Generador del lote.
            trials (int): Tramas a simular.
            n0 (float): Densidad de ruido; 0 desactiva el ruido.

        Returns:
            int: Bits erróneos en total.
        """
        cfg = self.config
        orden = cfg.M
        puntos = self.constellation.points
        amplitud = np.sqrt(cfg.es)
        errores = 0
        for inicio in range(0, trials, CHUNK_TRIALS):
            lote = min(CHUNK_TRIALS, trials - inicio)
            filas = np.arange(lote)

            g_s, gains = self.draw_channels(rng, lote)
            # k = (t-1)·M + (q-1): la trama de η bits es la representación binaria de k
            k = rng.integers(0, cfg.n_S * orden, size=lote)
            t, q = k // orden, k % orden

            y = amplitud * gains[filas, t, :] * puntos[q][:, None]
            if n0 > 0:
                y = y + complex_noise(rng, y.shape, n0)

            t_hat, q_hat, _ = self.detector.detect_batch(y, g_s, gains, self.constellation, cfg.es)
            k_hat = t_hat * orden + q_hat
            errores += int(popcount(k.astype(np.uint64) ^ k_hat.astype(np.uint64)).sum())
        return errores
