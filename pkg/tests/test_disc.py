import math

import numpy as np
import pytest

from noncompact import disc, quadrature, specfun

RADII = np.linspace(0.05, 0.95, 37)


# --- modes and matrix elements -------------------------------------------------


def test_mode_eigenvalue_and_normalization():
    mode = disc.DiscMode(branch=1, angular=1, radial=1, sign=+1)
    alpha = specfun.bessel_zero(0, 1)
    assert mode.eigenvalue == pytest.approx(alpha)
    assert mode.normalization == pytest.approx(1.0 / specfun.bessel_j(1, alpha))
    neg = disc.DiscMode(branch=2, angular=3, radial=2, sign=-1)
    assert neg.eigenvalue == pytest.approx(-specfun.bessel_zero(2, 2))


def test_mode_validation():
    with pytest.raises(ValueError):
        disc.DiscMode(branch=3, angular=1, radial=1, sign=+1)
    with pytest.raises(ValueError):
        disc.DiscMode(branch=1, angular=0, radial=1, sign=+1)
    with pytest.raises(ValueError):
        disc.DiscMode(branch=1, angular=1, radial=1, sign=0)


def test_element_branch_21_vanishes():
    assert disc.disc_matrix_element(2, 3, 1, 1, 2, 2) == 0


def test_element_trace_case():
    a1 = specfun.bessel_zero(0, 1)
    a2 = specfun.bessel_zero(0, 2)
    assert disc.disc_matrix_element(1, 1, 1, 2, 1, 1) == pytest.approx(1.0 / a1)
    assert disc.disc_matrix_element(1, 1, 1, 2, 1, 2) == pytest.approx(
        1.0 / (a1 + a2)
    )
    assert disc.disc_matrix_element(1, 2, 1, 2, 1, 1) == 0


def test_element_interior_cases_against_quadrature():
    rule = quadrature.gauss_legendre_unit()
    for i, j in [(1, 1), (1, 2), (2, 2)]:
        for n in range(1, 4):
            for m in range(1, 4):
                for k in range(1, 4):
                    for ell in range(1, 4):
                        closed = disc.disc_matrix_element(i, n, k, j, m, ell)
                        oracle = quadrature.oracle_disc_element(
                            i, n, k, j, m, ell, rule
                        )
                        assert closed == pytest.approx(oracle, abs=1e-10)


def test_element_validation():
    with pytest.raises(ValueError):
        disc.disc_matrix_element(0, 1, 1, 1, 1, 1)
    with pytest.raises(ValueError):
        disc.disc_matrix_element(1, 1, 0, 1, 1, 1)


# --- assembled compression -----------------------------------------------------


def test_assemble_matches_elements():
    comp = disc.assemble_disc_compression(3, 3)
    dim = 2 * 3 * 3
    assert comp.matrix.shape == (dim, dim)
    for a, row in enumerate(comp.row_modes):
        for b, col in enumerate(comp.col_modes):
            expected = disc.disc_matrix_element(
                row.branch, row.angular, row.radial, col.branch, col.angular, col.radial
            )
            assert comp.matrix[a, b] == pytest.approx(expected, abs=1e-14)


def test_assemble_correction_removed_diagonal():
    plain = disc.assemble_disc_compression(2, 4)
    removed = disc.assemble_disc_compression(2, 4, remove_correction=True)
    delta = plain.matrix - removed.matrix
    expected = np.zeros_like(delta)
    sv = disc.correction_singular_values(4)
    expected[np.arange(4), 2 * 4 + np.arange(4)] = sv
    np.testing.assert_allclose(delta, expected, atol=1e-15)
    assert sv[0] == pytest.approx(0.207915, abs=1e-6)
    assert np.all(np.diff(sv) < 0)


def test_assemble_sparsity():
    comp = disc.assemble_disc_compression(4, 3)
    nnz = np.count_nonzero(comp.matrix)
    # Blocks: (1,1) for m=1..3, (2,2) for n=1..3 (9 entries each), plus the
    # full (1,1)<-(2,1) trace block.
    assert nnz == 3 * 9 + 3 * 9 + 9


def test_assemble_size_guard():
    with pytest.raises(disc.CompressionSizeError):
        disc.assemble_disc_compression(100, 100)


# --- witness sequence ----------------------------------------------------------


def test_disc_witness_coefficients():
    w = disc.disc_witness(2, 2)
    np.testing.assert_allclose(
        w.coefficients, [math.sqrt(2) / 3, math.sqrt(2) / 4], atol=1e-15
    )
    assert w.closed_form_norm_sq == pytest.approx(2 * specfun.trigamma(3), abs=1e-12)


def test_image_coefficient_single_term():
    value = disc.disc_image_coefficient(1, 1, 1)
    assert value == pytest.approx(1.0 / (4.0 * specfun.bessel_zero(0, 1)), abs=1e-12)
    assert value == pytest.approx(0.103957, abs=1e-6)


def test_image_coefficient_monotone_in_truncation():
    values = [disc.disc_image_coefficient(5, 2, L) for L in (10, 100, 1000)]
    assert values[0] < values[1] < values[2]


def test_image_coefficients_vector_matches_scalar():
    vec = disc.disc_image_coefficients(7, 5, 200)
    scalars = [disc.disc_image_coefficient(7, k, 200) for k in range(1, 6)]
    np.testing.assert_allclose(vec, scalars, atol=1e-13)


def test_pairing_within_digamma_bounds():
    L = 20000
    for n, k in [(10, 1), (20, 3), (50, 5)]:
        value = disc.disc_image_coefficient(n, k, L)
        upper = disc.pairing_upper_bound(n, k)
        lower = disc.pairing_lower_bound(n, k)
        # Rigorous tail bound: terms ell > L are below sqrt(n)/(pi ell^2).
        tail = math.sqrt(n) / (math.pi * L)
        assert value <= upper
        assert value + tail >= lower


def test_pairing_bound_domain():
    with pytest.raises(ValueError):
        disc.pairing_upper_bound(3, 4)
    with pytest.raises(ValueError):
        disc.pairing_lower_bound(3, 0)


def test_image_norm_clears_model_bound():
    n = 100
    bound = (n - 1) / (4.0 * n * math.pi**2)
    value = disc.disc_image_norm_lowerbound(n, 1000, 1000)
    assert value**2 >= bound


# --- pointwise residuals -------------------------------------------------------


def test_eigenmode_residuals_vanish():
    for branch in (1, 2):
        for sign in (+1, -1):
            for n, k in [(1, 1), (2, 3), (5, 2)]:
                mode = disc.DiscMode(branch=branch, angular=n, radial=k, sign=sign)
                assert disc.eigenmode_residual(mode, RADII) < 1e-10


def test_eigenmode_residual_linearity():
    mode = disc.DiscMode(branch=1, angular=2, radial=1, sign=+1)
    base = disc.eigenmode_residual(mode, RADII, scale=1.0)
    doubled = disc.eigenmode_residual(mode, RADII, scale=2.0)
    assert doubled == pytest.approx(2.0 * base, rel=1e-10, abs=1e-18)


def test_deficiency_residuals_matched_sign():
    for family in (1, 2):
        for sign in (+1, -1):
            for n in range(0, 9):
                assert disc.deficiency_residual(n, family, sign, RADII) < 1e-10


def test_deficiency_residual_wrong_sign_is_large():
    matched = disc.deficiency_residual(0, 1, +1, RADII)
    wrong = disc.deficiency_residual(0, 1, +1, RADII, operator_sign=-1)
    assert wrong > 1.0
    assert wrong > 1e6 * max(matched, 1e-300)


def test_maximal_kernel_residuals_vanish():
    for n in range(0, 33):
        assert disc.maximal_kernel_residual(n, RADII) < 1e-10


def test_residual_domain_checks():
    mode = disc.DiscMode(branch=1, angular=1, radial=1, sign=+1)
    with pytest.raises(ValueError):
        disc.eigenmode_residual(mode, [0.0, 0.5])
    with pytest.raises(ValueError):
        disc.deficiency_residual(1, 3, +1, RADII)
    with pytest.raises(ValueError):
        disc.maximal_kernel_residual(-1, RADII)


def test_eigenvalue_multiplicities_are_four():
    counts = disc.eigenvalue_multiplicities(8, 8)
    assert sum(counts) == 4 * 8 * 8
    assert all(c == 4 for c in counts)
