"""
Comportamiento de las curvas de BER de los presets de referencia.

Simulaciones largas: todas las pruebas llevan el marcador slow.
"""

import os

import numpy as np
import pytest

from analysis import snr_at_ber, snr_gap_db
from simulation import SimConfig, WorkerPool, get_preset, run_ber_point, run_sweep

pytestmark = pytest.mark.slow

PROCESOS = min(4, os.cpu_count() or 1)


def configuracion(preset, **cambios):
    datos = {**get_preset(preset), "workers": PROCESOS, "batch_size": 10 ** 4}
    datos.update(cambios)
    return SimConfig.from_dict(datos)


def curva_hasta(config, inicio, paso, objetivo, pool, max_puntos=80):
    """
    Simula puntos de SNR crecientes desde inicio hasta el primero con BER
    por debajo del objetivo.

    Returns:
        tuple: (snr_db, ber) listas para snr_at_ber.
    """
    snr, ber = [], []
    for k in range(max_puntos):
        registro = run_ber_point(config, inicio + k * paso, point_index=k, pool=pool)
        snr.append(registro.snr_db)
        ber.append(registro.ber)
        if registro.ber < objetivo:
            break
    assert ber[0] > objetivo, f"{config.label}: la curva empieza por debajo de {objetivo:g}"
    assert ber[-1] < objetivo, f"{config.label}: la curva no alcanza {objetivo:g}"
    return snr, ber


class TestOrdenDeSistemas:
    def test_orden_con_eta_3(self):
        parada = {"min_bit_errors": 1000, "max_trials": 2 * 10 ** 7, "seed": 21}
        rsm = configuracion("eta3-rsm", **parada)
        with WorkerPool(PROCESOS) as pool:
            snr, ber = curva_hasta(rsm.replace(min_bit_errors=200), -26.0, 1.0, 1e-3, pool)
            # Punto de la malla con la BER de RIS-RSM más cercana a 1e-3
            snr_ref = snr[int(np.argmin(np.abs(np.log10(np.maximum(ber, 1e-12)) + 3.0)))]

            registros = {
                nombre: run_ber_point(configuracion(nombre, **parada), snr_ref, pool=pool)
                for nombre in ("eta3-edas", "eta3-coas", "eta3-acas", "eta3-rsm", "eta3-qam")
            }

        def mejor(a, b):
            return registros[a].ci_hi < registros[b].ci_lo

        assert mejor("eta3-edas", "eta3-coas")
        assert mejor("eta3-coas", "eta3-rsm")
        assert mejor("eta3-acas", "eta3-rsm")
        assert mejor("eta3-rsm", "eta3-qam")


class TestGananciaEnSnr:
    def test_ganancias_frente_a_ris_rsm(self):
        parada = {"min_bit_errors": 200, "max_trials": 3 * 10 ** 7, "seed": 23}
        with WorkerPool(PROCESOS) as pool:
            curvas = {
                nombre: curva_hasta(configuracion(nombre, **parada), -24.0, 0.5, 1e-5, pool)
                for nombre in ("eta3-rsm", "eta3-coas", "eta3-edas")
            }
        ganancia_edas = snr_gap_db(curvas["eta3-rsm"], curvas["eta3-edas"], 1e-5)
        ganancia_coas = snr_gap_db(curvas["eta3-rsm"], curvas["eta3-coas"], 1e-5)
        assert ganancia_edas == pytest.approx(2.01, abs=0.75)
        assert ganancia_coas == pytest.approx(1.05, abs=0.75)


class TestCotaFrenteAMonteCarlo:
    def test_acuerdo_en_la_banda_intermedia(self):
        config = configuracion(
            "eta3-coas", snr_grid_db="-22:-16:1", seed=7, n_channel=5000,
            min_bit_errors=500, max_trials=5 * 10 ** 6,
        )
        manifiesto = run_sweep(config, with_aber=True)
        en_banda = [
            (r, a) for r, a in zip(manifiesto.records, manifiesto.aber) if 1e-4 <= r.ber <= 1e-2
        ]
        assert len(en_banda) >= 2
        for registro, cota in en_banda:
            assert abs(np.log10(cota.value) - np.log10(registro.ber)) <= 0.3, registro.snr_db


@pytest.fixture(scope="module")
def curvas_coas_m16():
    """Curvas ML y voraz de COAS (M=16, n_R=8, n_S=4) con N=16 y N=64."""
    parada = {"min_bit_errors": 1000, "max_trials": 10 ** 7, "seed": 29}
    curvas = {}
    with WorkerPool(PROCESOS) as pool:
        for preset, inicio in (("n16-coas", -15.0), ("n64-coas", -27.0)):
            for detector in ("ml", "greedy"):
                config = configuracion(preset, detector=detector, **parada)
                curvas[(config.N, detector)] = curva_hasta(config, inicio, 0.5, 1e-3, pool)
    return curvas


class TestEscaladoConN:
    def test_voraz_converge_a_ml(self, curvas_coas_m16):
        separacion_16 = snr_gap_db(curvas_coas_m16[(16, "greedy")], curvas_coas_m16[(16, "ml")], 1e-3)
        separacion_64 = snr_gap_db(curvas_coas_m16[(64, "greedy")], curvas_coas_m16[(64, "ml")], 1e-3)
        assert separacion_16 is not None and separacion_64 is not None
        assert separacion_64 < separacion_16

    def test_cuadruplicar_n(self, curvas_coas_m16):
        snr_16 = snr_at_ber(*curvas_coas_m16[(16, "ml")], 1e-3)
        snr_64 = snr_at_ber(*curvas_coas_m16[(64, "ml")], 1e-3)
        assert 12.0 <= snr_16 - snr_64 <= 15.0
