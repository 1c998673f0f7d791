"""
Motor Monte Carlo de BER.

El trabajo de cada punto de SNR se divide en lotes de batch_size tramas.
Cada lote usa su propio generador (semilla, punto, lote) y los lotes se
procesan por rondas de tantos lotes como procesos. La regla de parada se
evalúa lote a lote en orden; los lotes de una ronda posteriores a la
parada se descartan. Así los resultados no dependen del número de procesos.

Funciones:
    run_ber_point: Simula un punto de SNR.
    run_sweep: Simula toda la malla de SNR y devuelve un RunManifest.
    replay_manifest: Repite una ejecución guardada.
    wilson_interval: Intervalo de confianza de Wilson para la BER.
"""

import logging
import time

from scipy.stats import binomtest

from channel.rayleigh import snr_db_to_n0
from simulation.link import LinkModel
from simulation.manifest import BerRecord, RunManifest
from simulation.rng import Stream, batch_rng
from simulation.sim_config import SimConfig
from simulation.workers import WorkerPool

LOGGER = logging.getLogger(__name__)

CONFIDENCE_LEVEL = 0.95

# Un LinkModel por configuración y proceso
_MODELOS = {}


def _modelo(config):
    clave = config.fingerprint()
    if clave not in _MODELOS:
        _MODELOS[clave] = LinkModel(config)
    return _MODELOS[clave]


def _run_batch(tarea):
    config, point_index, batch_index, trials, n0 = tarea
    rng = batch_rng(config.seed, Stream.BER, point_index, batch_index)
    return _modelo(config).run_trials(rng, trials, n0)


def wilson_interval(errores, bits, confianza=CONFIDENCE_LEVEL):
    """
    Intervalo de Wilson para una proporción de bits erróneos.

    Args:
        errores (int): Bits erróneos.
        bits (int): Bits observados.
        confianza (float): Nivel de confianza.

    Returns:
        tuple: (ci_lo, ci_hi); (0, 1) si no hay bits observados.
    """
    if bits <= 0:
        return 0.0, 1.0
    ci = binomtest(int(errores), int(bits)).proportion_ci(confidence_level=confianza, method="wilson")
    return float(ci.low), float(ci.high)


def run_ber_point(config, snr_db, point_index=0, pool=None):
    """
    Simula un punto de SNR hasta cumplir la regla de parada.

    Args:
        config (SimConfig): Configuración del experimento.
        snr_db (float): SNR en dB (Es/N0).
        point_index (int): Índice del punto en la malla (forma parte de la semilla).
        pool (WorkerPool, optional): Procesos ya creados; si es None se usan
            los config.workers procesos.

    Returns:
        BerRecord: Resultado del punto.
    """
    if pool is None:
        with WorkerPool(config.workers) as propio:
            return run_ber_point(config, snr_db, point_index, propio)

    inicio = time.perf_counter()
    n0 = 0.0 if config.noiseless else snr_db_to_n0(snr_db, config.es)

    tramas = 0
    errores = 0
    lote = 0
    parar = False
    while not parar:
        # Paso 1: preparar una ronda de lotes
        tareas = []
        asignadas = tramas
        for _ in range(pool.workers):
            if asignadas >= config.max_trials:
                break
            n = min(config.batch_size, config.max_trials - asignadas)
            tareas.append((config, point_index, lote + len(tareas), n, n0))
            asignadas += n
        if not tareas:
            break

        # Paso 2: acumular en orden y aplicar la regla de parada lote a lote
        for tarea, errores_lote in zip(tareas, pool.map(_run_batch, tareas)):
            tramas += tarea[3]
            errores += errores_lote
            lote += 1
            LOGGER.debug("SNR %.2f dB, lote %d: %d errores en %d tramas", snr_db, lote, errores, tramas)
            if errores >= config.min_bit_errors or tramas >= config.max_trials:
                parar = True
                break

    bits = tramas * config.eta
    ber = errores / bits if bits else 0.0
    ci_lo, ci_hi = wilson_interval(errores, bits)
    duracion = time.perf_counter() - inicio
    LOGGER.info(
        "%s | SNR %.2f dB: %d errores en %d tramas, BER %.3e (%.1f s)",
        config.label, snr_db, errores, tramas, ber, duracion,
    )
    return BerRecord(
        snr_db=float(snr_db),
        trials=int(tramas),
        bit_errors=int(errores),
        ber=float(ber),
        ci_lo=ci_lo,
        ci_hi=ci_hi,
        wall_time_s=float(duracion),
    )


def run_sweep(config, with_aber=False):
    """
    Simula todos los puntos de la malla de SNR.

    Args:
        config (SimConfig): Configuración del experimento.
        with_aber (bool): Si es True se añade la cota de unión de cada punto.

    Returns:
        RunManifest: Manifiesto con un registro por punto (vacío si la malla está vacía).
    """
    manifiesto = RunManifest(config=config.to_dict(), fingerprint=config.fingerprint(), seed=config.seed)
    if not config.snr_grid_db:
        LOGGER.warning("Malla de SNR vacía: no hay puntos que simular")
        return manifiesto

    with WorkerPool(config.workers) as pool:
        for i, snr_db in enumerate(config.snr_grid_db):
            manifiesto.records.append(run_ber_point(config, snr_db, i, pool))
        if with_aber:
            from analysis.aber_analysis import aber_curve

            manifiesto.aber.extend(aber_curve(config, config.snr_grid_db, pool=pool))
    return manifiesto


def replay_manifest(manifest, workers=None):
    """
    Repite la ejecución descrita por un manifiesto.

    Args:
        manifest (RunManifest): Manifiesto guardado.
        workers (int, optional): Procesos a usar (no altera los resultados).

    Returns:
        RunManifest: Nuevo manifiesto; same_results() indica si coincide.
    """
    config = SimConfig.from_dict(manifest.config)
    if workers is not None:
        config = config.replace(workers=workers)
    nuevo = run_sweep(config, with_aber=bool(manifest.aber))
    if nuevo.same_results(manifest):
        LOGGER.info("Repetición idéntica al manifiesto original")
    else:
        LOGGER.warning("La repetición no coincide con el manifiesto original")
    return nuevo
