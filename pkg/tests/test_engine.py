"""Pruebas del motor Monte Carlo, del manifiesto y de la configuración inmutable."""

import numpy as np
import pytest

from analysis import monotone_within_ci
from detectors import DetectorKind
from modem import ModulationKind
from selection import SelectionMethod
from simulation import (
    BerRecord,
    RunManifest,
    SimConfig,
    Stream,
    System,
    WorkerPool,
    batch_rng,
    fingerprint,
    replay_manifest,
    run_ber_point,
    run_sweep,
    wilson_interval,
)
from utils.errors import ConfigError
from utils.export_utils import BER_COLUMNS, export_csv, records_frame


def _cuadrado(x):
    return x * x


class TestWilson:
    def test_valor_conocido(self):
        lo, hi = wilson_interval(10, 100)
        assert lo == pytest.approx(0.0552, abs=1e-3)
        assert hi == pytest.approx(0.1744, abs=1e-3)

    def test_sin_errores(self):
        lo, hi = wilson_interval(0, 300)
        assert lo == pytest.approx(0.0, abs=1e-12)
        assert 0 < hi < 0.02

    def test_sin_bits(self):
        assert wilson_interval(0, 0) == (0.0, 1.0)

    def test_cobertura(self):
        rng = np.random.default_rng(1)
        p, n, repeticiones = 0.05, 1000, 400
        cubiertos = 0
        for _ in range(repeticiones):
            lo, hi = wilson_interval(int(rng.binomial(n, p)), n)
            cubiertos += lo <= p <= hi
        assert cubiertos / repeticiones >= 0.92


class TestSubflujos:
    def test_misma_clave_mismo_flujo(self):
        a = batch_rng(9, Stream.BER, 2, 3).standard_normal(5)
        b = batch_rng(9, Stream.BER, 2, 3).standard_normal(5)
        assert np.array_equal(a, b)

    @pytest.mark.parametrize("clave", [(Stream.ABER, 2, 3), (Stream.BER, 1, 3), (Stream.BER, 2, 4)])
    def test_claves_distintas(self, clave):
        a = batch_rng(9, Stream.BER, 2, 3).standard_normal(5)
        b = batch_rng(9, *clave).standard_normal(5)
        assert not np.array_equal(a, b)

    def test_pool_conserva_el_orden(self):
        with WorkerPool(2) as pool:
            assert pool.map(_cuadrado, range(10)) == [x * x for x in range(10)]
        with WorkerPool(1) as pool:
            assert pool.map(_cuadrado, [3]) == [9]


class TestRunBerPoint:
    def test_sin_ruido(self, config_base):
        config = config_base.replace(noiseless=True, max_trials=10 ** 4, batch_size=10 ** 4)
        registro = run_ber_point(config, 0.0)
        assert registro.bit_errors == 0
        assert registro.trials == 10 ** 4
        assert registro.ber == 0.0

    @pytest.mark.parametrize("M", [2, 4, 16, 64])
    @pytest.mark.parametrize("n_s", [1, 2, 4])
    def test_sin_ruido_todas_las_combinaciones(self, M, n_s):
        config = SimConfig.from_dict({
            "selection": "coas", "M": M, "n_R": 4, "n_S": n_s, "N": 16,
            "noiseless": True, "max_trials": 2000, "batch_size": 1000, "seed": M + n_s,
        })
        assert run_ber_point(config, 0.0).bit_errors == 0

    def test_ruido_dominante(self, config_base):
        config = config_base.replace(min_bit_errors=10 ** 9, max_trials=20000, batch_size=5000)
        registro = run_ber_point(config, -60.0)
        assert registro.ber == pytest.approx(0.5, abs=0.05)

    def test_parada_por_errores(self, config_base):
        config = config_base.replace(min_bit_errors=10, batch_size=100, max_trials=10 ** 6)
        registro = run_ber_point(config, -10.0)
        assert registro.trials == 100
        assert registro.bit_errors >= 10

    def test_parada_por_tramas(self, config_base):
        config = config_base.replace(min_bit_errors=10 ** 9, batch_size=100, max_trials=250)
        assert run_ber_point(config, 30.0).trials == 250

    def test_registro_coherente(self, config_base):
        registro = run_ber_point(config_base, 5.0)
        assert registro.ber == pytest.approx(registro.bit_errors / (registro.trials * config_base.eta))
        assert registro.ci_lo <= registro.ber <= registro.ci_hi
        assert 0.0 <= registro.ber <= 1.0


class TestRunSweep:
    def test_independiente_del_numero_de_procesos(self, config_base, tmp_path):
        config = config_base.replace(snr_grid_db=(0.0, 5.0, 10.0), min_bit_errors=300)
        uno = run_sweep(config)
        dos = run_sweep(config.replace(workers=2))
        assert [r.results() for r in uno.records] == [r.results() for r in dos.records]
        assert uno.fingerprint == dos.fingerprint

        export_csv(records_frame(uno), tmp_path / "uno.csv")
        export_csv(records_frame(dos), tmp_path / "dos.csv")
        assert (tmp_path / "uno.csv").read_bytes() == (tmp_path / "dos.csv").read_bytes()

    def test_malla_vacia(self, config_base):
        manifiesto = run_sweep(config_base.replace(snr_grid_db=()))
        assert manifiesto.records == []
        assert manifiesto.config["snr_grid_db"] == []

    def test_monotonia(self, config_base):
        manifiesto = run_sweep(config_base.replace(snr_grid_db=(0.0, 10.0, 20.0)))
        assert monotone_within_ci(manifiesto.records)

    def test_paridad_con_ris_rsm(self, config_base):
        comun = {"M": 4, "n_R": 2, "N": 16, "snr_grid_db": [0.0, 6.0], "seed": 3,
                 "min_bit_errors": 100, "max_trials": 3000, "batch_size": 500}
        sin_seleccion = SimConfig.from_dict({**comun, "system": "AS-RIS-RSM", "selection": "none"})
        rsm = SimConfig.from_dict({**comun, "system": "RIS-RSM"})
        a, b = run_sweep(sin_seleccion), run_sweep(rsm)
        assert [r.results() for r in a.records] == [r.results() for r in b.records]

    def test_con_cota_de_union(self, config_base):
        manifiesto = run_sweep(config_base.replace(snr_grid_db=(0.0, 10.0)), with_aber=True)
        assert [a.snr_db for a in manifiesto.aber] == [0.0, 10.0]

    def test_csv_con_cabecera(self, config_base, tmp_path):
        manifiesto = run_sweep(config_base.replace(snr_grid_db=(0.0,)))
        destino = tmp_path / "ber.csv"
        export_csv(records_frame(manifiesto), destino)
        contenido = destino.read_bytes()
        assert contenido.splitlines()[0].decode() == ",".join(BER_COLUMNS)
        assert b"\r\n" not in contenido

    @pytest.mark.slow
    def test_voraz_no_mejora_a_ml(self, config_base):
        config = config_base.replace(min_bit_errors=500, max_trials=10 ** 6, batch_size=5000)
        ml = run_ber_point(config, 10.0)
        voraz = run_ber_point(config.replace(detector=DetectorKind.GREEDY), 10.0)
        assert voraz.ci_hi >= ml.ci_lo


class TestManifest:
    def test_ida_y_vuelta_json(self, config_base, tmp_path):
        manifiesto = run_sweep(config_base.replace(snr_grid_db=(0.0, 4.0)), with_aber=True)
        destino = tmp_path / "manifiesto.json"
        manifiesto.to_json(destino)
        cargado = RunManifest.from_json(destino)
        assert cargado.same_results(manifiesto)
        assert cargado.aber == manifiesto.aber
        assert cargado.config == manifiesto.config
        assert cargado.timestamp == manifiesto.timestamp
        assert b"\r\n" not in destino.read_bytes()

    def test_repeticion(self, config_base):
        original = run_sweep(config_base.replace(snr_grid_db=(2.0, 8.0)))
        repetido = replay_manifest(original, workers=2)
        assert repetido.same_results(original)

    def test_manifiesto_invalido(self, tmp_path):
        destino = tmp_path / "roto.json"
        destino.write_text('{"config": {}}', encoding="utf-8")
        with pytest.raises(ConfigError):
            RunManifest.from_json(destino)
        with pytest.raises(ConfigError):
            RunManifest.from_json(tmp_path / "no_existe.json")

    def test_resultados_sin_tiempo(self):
        a = BerRecord(0.0, 100, 3, 0.01, 0.0, 0.02, wall_time_s=1.0)
        b = BerRecord(0.0, 100, 3, 0.01, 0.0, 0.02, wall_time_s=2.0)
        assert a.results() == b.results()


class TestSimConfig:
    def test_valores_por_defecto(self):
        config = SimConfig.from_dict({})
        assert config.system is System.AS_RIS_RSM
        assert config.selection is SelectionMethod.COAS
        assert (config.M, config.n_R, config.n_S, config.N) == (4, 8, 2, 32)
        assert config.eta == 3
        assert config.label == "COAS-RIS-RSM ML"

    def test_ris_rsm_usa_todas_las_antenas(self):
        config = SimConfig.from_dict({"system": "RIS-RSM", "n_R": 4})
        assert config.n_S == 4
        assert config.selection is SelectionMethod.NONE
        assert config.label == "RIS-RSM ML"

    def test_referencia_psk(self):
        config = SimConfig.from_dict({"system": "RIS-PSK", "M": 8})
        assert (config.n_R, config.n_S) == (1, 1)
        assert config.modulation is ModulationKind.PSK
        assert config.eta == 3

    @pytest.mark.parametrize("datos", [
        {"system": "RIS-QAM", "n_R": 2},
        {"system": "RIS-QAM", "detector": "greedy"},
        {"system": "RIS-PSK", "modulation": "QAM"},
        {"system": "RIS-RSM", "n_R": 4, "n_S": 2},
        {"system": "RIS-RSM", "selection": "coas"},
        {"n_R": 2, "n_S": 4},
        {"n_S": 3},
        {"M": 6},
        {"selection": "acas", "n_S": 1},
        {"selection": "none", "n_R": 8, "n_S": 2},
        {"n_R": 25},
        {"seed": -1},
        {"snr_grid_db": [5, 0]},
        {"Es": 0},
        {"system": "MIMO"},
        {"selection": "svd"},
        {"detector": "sphere"},
    ])
    def test_configuraciones_invalidas(self, datos):
        with pytest.raises(ConfigError):
            SimConfig.from_dict(datos)

    def test_huella_sin_procesos(self, config_base):
        assert config_base.fingerprint() == config_base.replace(workers=4).fingerprint()
        assert config_base.fingerprint() != config_base.replace(seed=12).fingerprint()

    def test_huella_canonica(self):
        assert fingerprint({"b": 1, "a": 2}) == fingerprint({"a": 2, "b": 1})

    def test_ida_y_vuelta_de_diccionario(self, config_base):
        assert SimConfig.from_dict(config_base.to_dict()) == config_base

    def test_replace_valida(self, config_base):
        with pytest.raises(ConfigError):
            config_base.replace(n_S=16)
