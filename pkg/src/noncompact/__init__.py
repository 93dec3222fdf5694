"""Finite compressions of spectral-projection sandwiches, witness-sequence
protocols, and the extension index ladder for two boundary-value models
(the unit interval and the unit disc)."""

from .analysis import (
    SweepProfile,
    WitnessReport,
    compression_sweep,
    singular_values,
    witness_protocol,
)
from .aps import aps_index, aps_kernel_dims, kernel_function_residual
from .disc import (
    DiscCompression,
    DiscMode,
    assemble_disc_compression,
    disc_matrix_element,
    disc_witness,
)
from .interval import (
    FourierMode,
    IntervalCompression,
    WitnessVector,
    assemble_interval_compression,
    interval_witness,
    position_matrix_element,
)
from .quadrature import QuadratureRule, gauss_legendre_unit, oracle_disc_element, radial_integral
from .specfun import (
    BesselZeroTable,
    bessel_i,
    bessel_j,
    bessel_zero,
    bessel_zeros,
    digamma,
    trigamma,
)

__version__ = "0.1.0"

__all__ = [
    "BesselZeroTable",
    "DiscCompression",
    "DiscMode",
    "FourierMode",
    "IntervalCompression",
    "QuadratureRule",
    "SweepProfile",
    "WitnessReport",
    "WitnessVector",
    "aps_index",
    "aps_kernel_dims",
    "assemble_disc_compression",
    "assemble_interval_compression",
    "bessel_i",
    "bessel_j",
    "bessel_zero",
    "bessel_zeros",
    "compression_sweep",
    "digamma",
    "disc_matrix_element",
    "disc_witness",
    "gauss_legendre_unit",
    "interval_witness",
    "kernel_function_residual",
    "oracle_disc_element",
    "position_matrix_element",
    "radial_integral",
    "singular_values",
    "trigamma",
    "witness_protocol",
]
