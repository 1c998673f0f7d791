"""Pruebas de la cota de unión, la capacidad ergódica y la complejidad."""

import logging
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from analysis import (
    ComplexitySystem,
    aber_curve,
    aber_union_bound,
    capacity_curve,
    complexity_report,
    complexity_rm,
    complexity_table,
    conditional_pep,
    ergodic_capacity,
    monotone_within_ci,
    q_function,
    ris_baseline_capacity,
    snr_at_ber,
    snr_gap_db,
)
from analysis.aber_analysis import pairwise_upsilon
from analysis.capacity_analysis import covariance_eigenvalues
from channel import effective_gain, effective_gains, sample_channels, snr_db_to_n0
from detectors import DetectorKind
from simulation.link import LinkModel
from simulation.manifest import BerRecord
from simulation.presets import get_preset
from simulation.rng import Stream, batch_rng
from simulation.sim_config import SimConfig
from tests.conftest import random_channel
from utils.errors import DimensionError, DivisionByZero, IndexOutOfRange, InvalidCombination, UnsupportedOrder

PARAMETROS = {
    "a": (16, 8, 4, 32),
    "b": (8, 16, 8, 64),
    "c": (16, 16, 8, 256),
}

# Valores de referencia de la tabla de complejidad: (sistema, detector) -> (a, b, c)
TABLA_RM = {
    ("RIS-QAM/PSK", "ml"): (72, 144, 476),
    ("RIS-RSM", "ml"): (768, 4608, 17408),
    ("RIS-RSM", "greedy"): (20, 16, 24),
    ("COAS-RIS-RSM", "ml"): (1792, 8704, 33792),
    ("COAS-RIS-RSM", "greedy"): (1044, 4112, 16408),
    ("ACAS-RIS-RSM", "ml"): (162468, 277121448, 1107403688),
    ("ACAS-RIS-RSM", "greedy"): (161720, 277116856, 1107386304),
    ("EDAS-RIS-RSM", "ml"): (807168, 645769728, 5535147008),
    ("EDAS-RIS-RSM", "greedy"): (806420, 645765136, 5535129624),
}

CASOS_RM = [
    (sistema, detector, columna, valores[i])
    for (sistema, detector), valores in TABLA_RM.items()
    for i, columna in enumerate("abc")
]


class TestQFunction:
    def test_valores(self):
        assert q_function(0.0) == pytest.approx(0.5)
        assert q_function(1.6449) == pytest.approx(0.05, abs=1e-4)
        assert isinstance(q_function(1.0), float)

    @given(st.floats(min_value=-30, max_value=30))
    def test_simetria(self, x):
        assert q_function(x) + q_function(-x) == pytest.approx(1.0)

    def test_vectorial(self):
        valores = q_function(np.array([0.0, 1.0, 2.0]))
        assert valores.shape == (3,)
        assert np.all(np.diff(valores) < 0)


class TestConditionalPep:
    def test_hipotesis_identicas(self, rng, qam4):
        g = random_channel(rng, 8, 2)
        assert conditional_pep(g, 1, 2, 1, 2, qam4, 1.0, 0.1) == pytest.approx(0.5)

    def test_bpsk_misma_antena(self, rng, bpsk):
        g = random_channel(rng, 8, 1)
        h = effective_gain(g, 1)[0]
        es, n0 = 1.5, 4.0
        esperado = q_function(np.sqrt(2 * es * abs(h) ** 2 / n0))
        assert conditional_pep(g, 1, 1, 1, 2, bpsk, es, n0) == pytest.approx(esperado)

    def test_rango(self, rng, qam16):
        g = random_channel(rng, 4, 4)
        for _ in range(50):
            t, q, t_hat, q_hat = (int(v) for v in rng.integers(1, 5, size=4))
            if (t, q) == (t_hat, q_hat):
                continue
            valor = conditional_pep(g, t, q, t_hat, q_hat, qam16, 1.0, 2.0)
            assert 0.0 < valor <= 0.5

    def test_n0_nulo(self, rng, qam4):
        with pytest.raises(DivisionByZero):
            conditional_pep(random_channel(rng, 4, 2), 1, 1, 2, 1, qam4, 1.0, 0.0)

    def test_indices_fuera_de_rango(self, rng, qam4):
        with pytest.raises(IndexOutOfRange):
            conditional_pep(random_channel(rng, 4, 2), 3, 1, 1, 1, qam4, 1.0, 1.0)
        with pytest.raises(IndexOutOfRange):
            conditional_pep(random_channel(rng, 4, 2), 1, 5, 1, 1, qam4, 1.0, 1.0)

    def test_coincide_con_la_simulacion_del_evento(self, rng, qam4):
        g = random_channel(rng, 4, 2)
        h = effective_gains(g)
        x = h[0] * qam4.symbol(1)
        x_hat = h[1] * qam4.symbol(2)
        upsilon = np.sum(np.abs(x - x_hat) ** 2)
        # N0 elegido para que la probabilidad sea Q(1.5)
        n0 = upsilon / (2 * 1.5 ** 2)
        pep = conditional_pep(g, 1, 1, 2, 2, qam4, 1.0, n0)
        assert pep == pytest.approx(q_function(1.5))

        sorteos = 10 ** 5
        w = np.sqrt(n0 / 2) * (rng.standard_normal((sorteos, 2)) + 1j * rng.standard_normal((sorteos, 2)))
        y = x + w
        errores = np.sum(np.abs(y - x) ** 2, axis=1) > np.sum(np.abs(y - x_hat) ** 2, axis=1)
        error_estandar = np.sqrt(pep * (1 - pep) / sorteos)
        assert abs(errores.mean() - pep) < 3 * error_estandar

    def test_upsilon_por_pares(self, rng, qam4):
        g = random_channel(rng, 8, 2)
        gains = effective_gains(g)
        upsilon = pairwise_upsilon(gains[None], qam4.points, 2.0)[0]
        x = [gains[k // 4] * qam4.points[k % 4] for k in range(8)]
        for k in range(8):
            for j in range(8):
                assert upsilon[k, j] == pytest.approx(2.0 * np.sum(np.abs(x[k] - x[j]) ** 2), abs=1e-9)


class TestAberUnionBound:
    def test_snr_alta(self, config_base):
        assert aber_union_bound(config_base, 60.0).value < 1e-10

    def test_determinista(self, config_base):
        a = aber_union_bound(config_base, 10.0, n_channel=100)
        b = aber_union_bound(config_base, 10.0, n_channel=100)
        assert a == b
        assert a.channel_realizations == 100
        assert a.fingerprint == config_base.fingerprint()

    def test_decreciente_en_snr(self, config_base):
        curva = aber_curve(config_base, [0.0, 5.0, 10.0, 15.0], n_channel=100)
        valores = [a.value for a in curva]
        assert all(v >= 0 for v in valores)
        assert valores == sorted(valores, reverse=True)

    def test_misma_curva_punto_a_punto(self, config_base):
        curva = aber_curve(config_base, [0.0, 10.0], n_channel=50)
        assert curva[1].value == pytest.approx(aber_union_bound(config_base, 10.0, n_channel=50).value)

    def test_malla_vacia(self, config_base):
        assert aber_curve(config_base, []) == []

    def test_n_channel_invalido(self, config_base):
        with pytest.raises(DimensionError):
            aber_union_bound(config_base, 10.0, n_channel=0)

    def test_aviso_con_detector_voraz(self, config_base, caplog):
        with caplog.at_level(logging.WARNING):
            aber_union_bound(config_base.replace(detector=DetectorKind.GREEDY), 10.0, n_channel=10)
        assert "ML" in caplog.text


class TestCapacity:
    def test_autovalores_no_negativos(self, rng):
        g = sample_channels(rng, 50, 16, 4)
        assert np.all(covariance_eigenvalues(effective_gains(g)) >= 0)

    def test_coincide_con_log_det(self, config_base):
        registro = ergodic_capacity(config_base, 10.0, n_channel=40)
        modelo = LinkModel(config_base)
        _, gains = modelo.draw_channels(batch_rng(config_base.seed, Stream.CAPACITY, 0, 0), 40)
        n0 = snr_db_to_n0(10.0)
        capacidades = []
        for h in gains:
            a = sum(np.outer(h[l], np.conj(h[l])) for l in range(config_base.n_S))
            _, logdet = np.linalg.slogdet(np.eye(config_base.n_S) + a / (config_base.n_S * n0))
            capacidades.append(logdet / np.log(2))
        assert registro.bits_per_use == pytest.approx(np.mean(capacidades), rel=1e-9)
        assert registro.realizations == 40

    def test_ruido_infinito(self, config_base):
        assert ergodic_capacity(config_base, -100.0, n_channel=50).bits_per_use < 1e-5

    def test_crece_con_n(self, config_base):
        malla = [0.0, 10.0, 20.0]
        pequena = capacity_curve(config_base.replace(N=4), malla, n_channel=500)
        grande = capacity_curve(config_base.replace(N=16), malla, n_channel=500)
        for p, g in zip(pequena, grande):
            assert g.bits_per_use - 2 * g.std_error > p.bits_per_use + 2 * p.std_error

    def test_error_estandar_muestral(self, config_base):
        registro = ergodic_capacity(config_base, 5.0, n_channel=60)
        _, gains = LinkModel(config_base).draw_channels(batch_rng(config_base.seed, Stream.CAPACITY, 0, 0), 60)
        autovalores = covariance_eigenvalues(gains)
        c = np.sum(np.log2(1.0 + autovalores / (config_base.n_S * snr_db_to_n0(5.0))), axis=-1)
        assert registro.std_error == pytest.approx(np.std(c, ddof=1) / np.sqrt(60), rel=1e-6)

    def test_covarianza_no_semidefinida(self, rng, monkeypatch):
        gains = effective_gains(sample_channels(rng, 3, 8, 2))
        monkeypatch.setattr(np.linalg, "eigvalsh", lambda a: np.array([[-1.0, 2.0]] * len(a)))
        with pytest.raises(DimensionError, match="semidefinida"):
            covariance_eigenvalues(gains)

    def test_curva_creciente(self, config_base):
        curva = capacity_curve(config_base, [0.0, 10.0, 20.0], n_channel=100)
        valores = [r.bits_per_use for r in curva]
        assert valores == sorted(valores)
        assert all(r.std_error > 0 for r in curva)

    def test_referencia_de_una_antena(self, config_base):
        registro = ris_baseline_capacity(config_base, 5.0, n_channel=30)
        g = sample_channels(batch_rng(config_base.seed, Stream.BASELINE_CAPACITY, 0, 0), 30, config_base.N, 1)
        ganancia = np.abs(g[:, :, 0]).sum(axis=1) ** 2
        esperado = np.mean(np.log2(1 + ganancia / snr_db_to_n0(5.0)))
        assert registro.bits_per_use == pytest.approx(esperado)

    @pytest.mark.slow
    @pytest.mark.parametrize("method", ["coas", "acas", "edas"])
    def test_seleccion_supera_a_rsm(self, method):
        malla = [0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0]
        curvas = {}
        for n in (4, 16):
            rsm = SimConfig.from_dict({**get_preset(f"cap-n{n}-rsm"), "seed": 5})
            seleccion = SimConfig.from_dict({**get_preset(f"cap-n{n}-{method}"), "seed": 5})
            referencia = capacity_curve(rsm, malla, n_channel=1000)
            curvas[n] = capacity_curve(seleccion, malla, n_channel=1000)
            for r, p in zip(referencia, curvas[n]):
                assert p.bits_per_use >= r.bits_per_use - 2 * math.hypot(p.std_error, r.std_error), p.snr_db
        for pequena, grande in zip(curvas[4], curvas[16]):
            assert grande.bits_per_use - 2 * grande.std_error > pequena.bits_per_use + 2 * pequena.std_error


class TestComplexity:
    @pytest.mark.parametrize("sistema, detector, columna, esperado", CASOS_RM)
    def test_tabla_de_referencia(self, sistema, detector, columna, esperado):
        M, n_r, n_s, n = PARAMETROS[columna]
        assert complexity_rm(sistema, detector, M, n_r, n_s, n) == esperado

    def test_aritmetica_entera(self):
        valor = complexity_rm("EDAS-RIS-RSM", "ml", 16, 16, 8, 256)
        assert type(valor) is int
        assert valor == 5_535_147_008

    def test_tabla_completa(self):
        tabla = complexity_table({c: dict(zip(("M", "n_R", "n_S", "N"), p)) for c, p in PARAMETROS.items()})
        assert tabla.shape == (9, 3)
        assert tabla.loc["COAS-RIS-RSM ML", "a"] == 1792
        assert tabla.loc["EDAS-RIS-RSM GREEDY", "c"] == 5535129624
        assert list(tabla["b"]) == [v[1] for v in TABLA_RM.values()]

    def test_qam_psk_sin_voraz(self):
        with pytest.raises(InvalidCombination):
            complexity_rm("RIS-QAM", "greedy", 16, 8, 4, 32)

    def test_sistema_desconocido(self):
        with pytest.raises(InvalidCombination):
            complexity_rm("SVD-RIS-RSM", "ml", 16, 8, 4, 32)

    @pytest.mark.parametrize("texto", ["RIS-PSK", "ris_qam", "RIS-QAM/PSK"])
    def test_alias_de_referencia(self, texto):
        assert ComplexitySystem.parse(texto) is ComplexitySystem.RIS_QAM_PSK

    def test_parametros_invalidos(self):
        with pytest.raises(UnsupportedOrder):
            complexity_rm("COAS", "ml", 6, 8, 4, 32)
        with pytest.raises(DimensionError):
            complexity_rm("COAS", "ml", 16, 4, 8, 32)

    def test_no_entero_se_redondea(self, caplog):
        with caplog.at_level(logging.WARNING):
            assert complexity_rm("RIS-QAM/PSK", "ml", 4, 2, 2, 1) == 8
        assert "no entera" in caplog.text

    def test_informe(self):
        informe = complexity_report("ACAS", "gd", 16, 8, 4, 32)
        assert informe.rm_count == 161720
        assert informe.parameters == {"M": 16, "n_R": 8, "n_S": 4, "N": 32}


class TestCurvas:
    def test_interpolacion_logaritmica(self):
        assert snr_at_ber([0, 10], [1e-1, 1e-3], 1e-2) == pytest.approx(5.0)

    def test_objetivo_no_acotado(self):
        assert snr_at_ber([0, 10], [1e-1, 1e-3], 1e-4) is None
        assert snr_at_ber([0, 10], [1e-1, 1e-3], 0.0) is None

    def test_ignora_ber_nula(self):
        assert snr_at_ber([0, 5, 10], [1e-1, 1e-3, 0.0], 1e-2) == pytest.approx(2.5)

    def test_ganancia_en_db(self):
        referencia = ([0, 10, 20], [1e-1, 1e-2, 1e-3])
        mejorada = ([0, 10, 20], [1e-2, 1e-3, 1e-4])
        assert snr_gap_db(referencia, mejorada, 1e-3) == pytest.approx(10.0)
        assert snr_gap_db(referencia, mejorada, 1e-5) is None

    def test_monotonia_con_intervalos(self):
        def registro(snr, ber, lo, hi):
            return BerRecord(snr, 1000, int(ber * 3000), ber, lo, hi)

        assert monotone_within_ci([registro(0, 0.1, 0.09, 0.11), registro(5, 0.1, 0.095, 0.12)])
        assert not monotone_within_ci([registro(0, 0.1, 0.09, 0.11), registro(5, 0.2, 0.15, 0.25)])

    def test_interpolacion_exacta(self):
        snr = np.array([0.0, 2.0, 4.0])
        ber = 10.0 ** (-snr / 2)
        assert_allclose(snr_at_ber(snr, ber, 10 ** -1.5), 3.0)
