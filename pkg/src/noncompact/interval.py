"""The unit-interval model: Fourier eigenbasis of the periodic extension of
the momentum operator, the compression of multiplication by x between the
nonnegative and negative spectral subspaces, and the witness sequence.

Column modes are stored as positive integers n representing e^{-2 pi i n x};
the matrix entry against row mode e^{2 pi i l x} is -1/(2 pi i (n + l)), with
the global phase kept in the entries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special as _sp

from . import specfun

TWO_PI = 2.0 * math.pi

# Refuse to allocate matrices beyond this many entries (reported, not crashed).
MAX_MATRIX_ENTRIES = 200_000_000


class CompressionSizeError(ValueError):
    """Requested compression would exceed the allocation guard."""


@dataclass(frozen=True)
class FourierMode:
    """Eigenvector e^{2 pi i n x} of the periodic extension, eigenvalue 2 pi n."""

    index: int

    @property
    def eigenvalue(self) -> float:
        return TWO_PI * self.index

    @property
    def nonnegative(self) -> bool:
        # Range of the nonnegative spectral projection.
        return self.index >= 0


def position_matrix_element(ell: int, n: int) -> complex:
    """<e^{2 pi i ell x} | x | e^{2 pi i n x}> in the Fourier basis."""
    if ell == n:
        return 0.5 + 0.0j
    return 1.0 / (2j * math.pi * (n - ell))


@dataclass(frozen=True)
class IntervalCompression:
    matrix: np.ndarray
    row_modes: tuple[FourierMode, ...]
    col_modes: tuple[FourierMode, ...]


def assemble_interval_compression(n_pos: int, n_neg: int) -> IntervalCompression:
    """Dense compression with rows l = 0..n_pos-1 and columns n = 1..n_neg
    (column n standing for the mode e^{-2 pi i n x})."""
    if n_pos < 1 or n_neg < 1:
        raise ValueError("n_pos and n_neg must be >= 1")
    if n_pos * n_neg > MAX_MATRIX_ENTRIES:
        raise CompressionSizeError(
            f"{n_pos} x {n_neg} compression exceeds the allocation guard"
        )
    ell = np.arange(n_pos, dtype=float)[:, None]
    n = np.arange(1, n_neg + 1, dtype=float)[None, :]
    matrix = 1j / (TWO_PI * (n + ell))
    rows = tuple(FourierMode(int(v)) for v in range(n_pos))
    cols = tuple(FourierMode(-int(v)) for v in range(1, n_neg + 1))
    return IntervalCompression(matrix=matrix, row_modes=rows, col_modes=cols)


@dataclass(frozen=True)
class WitnessVector:
    """Truncated witness vector with a rigorous tail bound.

    coefficients[i] is the weight on the i-th labeled mode; tail_bound bounds
    the l2 norm of the omitted coefficients.  scale is the sequence parameter
    (m for the interval model, n for the disc model).
    """

    coefficients: np.ndarray
    truncation: int
    tail_bound: float
    scale: int

    @property
    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.coefficients) ** 2))

    @property
    def closed_form_norm_sq(self) -> float:
        return self.scale * specfun.trigamma(self.scale + 1)


def interval_witness(m: int, truncation: int) -> WitnessVector:
    """Witness vector with coefficients sqrt(m)/(n+m) on e^{-2 pi i n x},
    n = 1..truncation; the exact series tail gives the tail bound."""
    if m < 1 or truncation < 1:
        raise ValueError("m and truncation must be >= 1")
    n = np.arange(1, truncation + 1, dtype=float)
    coeffs = math.sqrt(m) / (n + m)
    tail_sq = m * specfun.trigamma(m + truncation + 1)
    return WitnessVector(
        coefficients=coeffs,
        truncation=truncation,
        tail_bound=math.sqrt(tail_sq),
        scale=m,
    )


def interval_image_pairing(m: int, p: int) -> complex:
    """Closed-form coefficient of the witness image on e^{2 pi i p x}."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if p < 0:
        return 0.0 + 0.0j
    phase = 1j * math.sqrt(m) / TWO_PI  # -1/(2 pi i) = i/(2 pi)
    if p == m:
        return phase * specfun.trigamma(m + 1)
    return phase * (specfun.digamma(m + 1) - specfun.digamma(p + 1)) / (m - p)


def interval_image_coefficients(m: int, k_rows: int, l_cols: int) -> np.ndarray:
    """Moduli of the truncated-image coefficients on e^{2 pi i l x},
    l = 0..k_rows-1, using l_cols witness terms.

    The inner sums are evaluated exactly (up to rounding) via partial
    fractions and digamma differences; since every summed term is positive,
    each value is a certified lower bound for the full coefficient modulus.
    """
    if m < 1 or k_rows < 1 or l_cols < 1:
        raise ValueError("m, k_rows, l_cols must be >= 1")
    ell = np.arange(k_rows, dtype=float)
    s = np.empty(k_rows)
    off = ell != m
    lo = ell[off]
    # sum_{n=1}^{L} 1/((n+m)(n+l)) for l != m.
    s[off] = (
        (_sp.digamma(lo + l_cols + 1) - _sp.digamma(lo + 1))
        - (_sp.digamma(m + l_cols + 1) - _sp.digamma(m + 1))
    ) / (m - lo)
    if np.any(~off):
        s[~off] = _sp.polygamma(1, m + 1) - _sp.polygamma(1, m + l_cols + 1)
    return math.sqrt(m) / TWO_PI * s


def interval_image_norm_lowerbound(m: int, k_rows: int, l_cols: int) -> float:
    """Norm of the truncated image; a certified lower bound for the full
    image norm because every omitted contribution is orthogonal."""
    coeffs = interval_image_coefficients(m, k_rows, l_cols)
    return float(np.sqrt(np.sum(coeffs**2)))
