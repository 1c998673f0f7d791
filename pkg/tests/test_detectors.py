"""Pruebas de los detectores ML y voraz."""

import numpy as np
import pytest

from channel import ReceivedVector, complex_noise, effective_gain, effective_gains
from detectors import (
    DetectorKind,
    GreedyDetector,
    MLDetector,
    detect,
    get_available_detectors,
    get_detector,
    greedy_detect,
    ml_detect,
)
from tests.conftest import random_channel
from utils.errors import DimensionError


def senal(g_s, t, q, constellation, es=1.0):
    """Señal sin ruido para la hipótesis (t, q) con índices desde 1."""
    return np.sqrt(es) * effective_gain(g_s, t) * constellation.symbol(q)


def metrica(y, g_s, t, q, constellation, es):
    return float(np.sum(np.abs(y - senal(g_s, t, q, constellation, es)) ** 2))


class TestMLDetect:
    def test_sin_ruido_todas_las_hipotesis(self, rng, qam16):
        g = random_channel(rng, 32, 4)
        for t in range(1, 5):
            for q in range(1, 17):
                resultado = ml_detect(senal(g, t, q, qam16, 2.0), g, qam16, 2.0)
                assert (resultado.t_hat, resultado.q_hat) == (t, q)
                assert resultado.metric == pytest.approx(0.0, abs=1e-18)

    def test_bpsk_escalar(self, rng, bpsk):
        h = complex(rng.standard_normal(), rng.standard_normal())
        g = np.array([[h]])
        ganancia = effective_gain(g, 1)[0]
        for _ in range(50):
            y = np.array([complex(rng.standard_normal(), rng.standard_normal())])
            esperado = 1 if np.real(y[0] * np.conj(ganancia)) > 0 else 2
            assert ml_detect(y, g, bpsk, 1.0).q_hat == esperado

    def test_minimo_global(self, rng, qam4):
        g = random_channel(rng, 8, 4)
        for _ in range(50):
            t, q = int(rng.integers(1, 5)), int(rng.integers(1, 5))
            y = senal(g, t, q, qam4) + complex_noise(rng, (4,), 4.0)
            resultado = ml_detect(y, g, qam4, 1.0)
            metricas = [
                metrica(y, g, tt, qq, qam4, 1.0) for tt in range(1, 5) for qq in range(1, 5)
            ]
            assert resultado.metric == pytest.approx(min(metricas))
            assert resultado.metric <= metrica(y, g, t, q, qam4, 1.0) + 1e-12
            assert metricas.index(min(metricas)) == (resultado.t_hat - 1) * 4 + (resultado.q_hat - 1)

    def test_acepta_received_vector(self, rng, qam4):
        g = random_channel(rng, 16, 2)
        y = ReceivedVector(y=senal(g, 2, 1, qam4), n0=0.0, es=1.0)
        assert (ml_detect(y, g, qam4, 1.0).t_hat, ml_detect(y, g, qam4, 1.0).q_hat) == (2, 1)

    def test_longitud_incorrecta(self, rng, qam4):
        with pytest.raises(DimensionError):
            ml_detect(np.zeros(3, dtype=complex), random_channel(rng, 8, 2), qam4, 1.0)


class TestGreedyDetect:
    def test_antena_de_mayor_energia(self, rng, qam4):
        g = random_channel(rng, 8, 3)
        y = np.array([0.1, 2.3j, -0.5])
        assert greedy_detect(y, g, qam4, 1.0).t_hat == 2

    def test_simbolo_con_la_amplitud_alineada(self, rng, qam4):
        g = random_channel(rng, 64, 2)
        amplitud = np.abs(g[:, 0]).sum()
        for q in range(1, 5):
            y = np.array([amplitud * qam4.symbol(q), 0.0])
            resultado = greedy_detect(y, g, qam4, 1.0)
            assert (resultado.t_hat, resultado.q_hat) == (1, q)

    def test_sin_ruido_con_antena_correcta(self, rng, qam4):
        g = random_channel(rng, 32, 4)
        for t in range(1, 5):
            for q in range(1, 5):
                resultado = greedy_detect(senal(g, t, q, qam4), g, qam4, 1.0)
                if resultado.t_hat == t:
                    assert resultado.q_hat == q

    def test_coincide_con_ml_para_n_grande(self, rng, qam4):
        detector_ml, detector_voraz = MLDetector(), GreedyDetector()
        lote = 2000
        g = (rng.standard_normal((lote, 256, 2)) + 1j * rng.standard_normal((lote, 256, 2))) / np.sqrt(2)
        gains = effective_gains(g)
        k = rng.integers(0, 8, size=lote)
        filas = np.arange(lote)
        y = gains[filas, k // 4, :] * qam4.points[k % 4][:, None]
        t_ml, q_ml, _ = detector_ml.detect_batch(y, g, gains, qam4, 1.0)
        t_gd, q_gd, _ = detector_voraz.detect_batch(y, g, gains, qam4, 1.0)
        acuerdo = np.mean((t_ml == t_gd) & (q_ml == q_gd))
        assert acuerdo >= 0.99


class TestDespacho:
    def test_detect_delega(self, rng, qam4):
        g = random_channel(rng, 8, 2)
        y = senal(g, 2, 3, qam4) + complex_noise(rng, (2,), 0.5)
        assert detect(y, g, qam4, 1.0) == ml_detect(y, g, qam4, 1.0)
        assert detect(y, g, qam4, 1.0, detector="greedy") == greedy_detect(y, g, qam4, 1.0)

    def test_registro(self):
        assert isinstance(get_detector("gd"), GreedyDetector)
        assert isinstance(get_detector(DetectorKind.ML), MLDetector)
        assert get_available_detectors() == ["ml", "greedy"]

    def test_detector_desconocido(self):
        with pytest.raises(DimensionError, match="Disponibles"):
            get_detector("sphere")
