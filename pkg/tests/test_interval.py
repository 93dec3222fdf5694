import math

import numpy as np
import pytest

from noncompact import interval, specfun

TWO_PI = 2.0 * math.pi


# --- eigenbasis and matrix elements -------------------------------------------


def test_fourier_mode_eigenvalue():
    assert interval.FourierMode(3).eigenvalue == pytest.approx(6.0 * math.pi)
    assert interval.FourierMode(0).nonnegative
    assert not interval.FourierMode(-2).nonnegative


def test_position_element_diagonal():
    assert interval.position_matrix_element(4, 4) == pytest.approx(0.5)


def test_position_element_off_diagonal():
    # <e^{0} | x | e^{2 pi i x}> = 1/(2 pi i) = -i/(2 pi).
    value = interval.position_matrix_element(0, 1)
    assert value == pytest.approx(-1j / TWO_PI, abs=1e-15)
    # Hermitian conjugate relation.
    assert interval.position_matrix_element(1, 0) == pytest.approx(
        np.conj(value), abs=1e-15
    )


def test_position_element_oracle():
    # Independent trapezoid oracle for int_0^1 x e^{2 pi i (n - l) x} dx.
    x = np.linspace(0.0, 1.0, 200001)
    for ell, n in [(0, 1), (2, -3), (5, 5), (-1, 4)]:
        integrand = x * np.exp(2j * math.pi * (n - ell) * x)
        expected = np.trapezoid(integrand, x)
        assert interval.position_matrix_element(ell, n) == pytest.approx(
            expected, abs=1e-8
        )


def test_compression_entries():
    comp = interval.assemble_interval_compression(8, 8)
    assert comp.matrix.shape == (8, 8)
    # Row l=0, column n=1 holds <e^0 | x | e^{-2 pi i x}> = i/(2 pi).
    assert comp.matrix[0, 0] == pytest.approx(1j / TWO_PI, abs=1e-15)
    for a, row in enumerate(comp.row_modes):
        for b, col in enumerate(comp.col_modes):
            assert row.nonnegative and not col.nonnegative
            expected = interval.position_matrix_element(row.index, col.index)
            assert comp.matrix[a, b] == pytest.approx(expected, abs=1e-15)
    # Every entry has modulus <= 1/(2 pi).
    assert np.max(np.abs(comp.matrix)) <= 1.0 / TWO_PI + 1e-15


def test_compression_size_guard():
    with pytest.raises(interval.CompressionSizeError):
        interval.assemble_interval_compression(100000, 100000)
    with pytest.raises(ValueError):
        interval.assemble_interval_compression(0, 4)


# --- witness vectors -----------------------------------------------------------


def test_witness_coefficients():
    w = interval.interval_witness(1, 3)
    np.testing.assert_allclose(w.coefficients, [1 / 2, 1 / 3, 1 / 4], atol=1e-15)


def test_witness_norm_identity():
    for m in (1, 10, 100, 1000):
        w = interval.interval_witness(m, 50 * m)
        total = w.norm_sq + w.tail_bound**2
        assert total == pytest.approx(w.closed_form_norm_sq, abs=1e-10)


def test_witness_norm_bounded():
    w = interval.interval_witness(10**4, 10**5)
    assert w.closed_form_norm_sq == pytest.approx(0.99995, abs=1e-5)
    assert w.closed_form_norm_sq <= 1.01


def test_witness_invalid():
    with pytest.raises(ValueError):
        interval.interval_witness(0, 10)


# --- image pairings ------------------------------------------------------------


def test_pairing_negative_mode_vanishes():
    assert interval.interval_image_pairing(3, -1) == 0


def test_pairing_diagonal_value():
    # |<zeta_1, e_1>| = trigamma(2)/(2 pi) = (pi^2/6 - 1)/(2 pi).
    value = interval.interval_image_pairing(1, 1)
    assert abs(value) == pytest.approx((math.pi**2 / 6 - 1) / TWO_PI, abs=1e-12)
    assert abs(value) == pytest.approx(0.102644, abs=1e-6)
    # The phase is purely imaginary (multiplication by i/(2 pi)).
    assert value.real == pytest.approx(0.0, abs=1e-15)


def test_pairing_vanishing_limit():
    assert abs(interval.interval_image_pairing(10**6, 0)) < 1e-2


def test_image_coefficients_match_direct_sum():
    # Direct numpy summation oracle against the digamma partial fractions.
    L = 10**5
    n = np.arange(1, L + 1, dtype=float)
    for m in (1, 5, 17, 50):
        direct = np.array(
            [
                math.sqrt(m) / TWO_PI * np.sum(1.0 / ((n + m) * (n + p)))
                for p in range(6)
            ]
        )
        coeffs = interval.interval_image_coefficients(m, 6, L)
        np.testing.assert_allclose(coeffs, direct, atol=1e-10)


def test_image_coefficients_approach_closed_form_pairing():
    L = 10**5
    for m, p in [(1, 0), (5, 5), (17, 2), (50, 12)]:
        truncated = interval.interval_image_coefficients(m, p + 1, L)[p]
        full = abs(interval.interval_image_pairing(m, p))
        tail = math.sqrt(m) / TWO_PI * 2.0 / L
        assert truncated <= full + 1e-12
        assert full - truncated <= tail


def test_image_norm_lowerbound_single_term():
    # m=1, K=L=1: single coefficient 1/(2 pi (1+1)(1+1))... the (l=0,n=1)
    # term is sqrt(1)/(2 pi (1+1)(1+0)) = 1/(4 pi), squared 1/(16 pi^2).
    value = interval.interval_image_norm_lowerbound(1, 1, 1)
    assert value**2 == pytest.approx(1.0 / (16.0 * math.pi**2), abs=1e-12)


def test_image_norm_lowerbound_monotone():
    prev = interval.interval_image_norm_lowerbound(7, 10, 10)
    for scale in (2, 4, 8):
        cur = interval.interval_image_norm_lowerbound(7, 10 * scale, 10 * scale)
        assert cur >= prev - 1e-15
        prev = cur


def test_image_norm_clears_bound():
    bound = 1.0 / (4.0 * math.pi**2)
    value = interval.interval_image_norm_lowerbound(100, 1000, 1000)
    assert value**2 >= bound
