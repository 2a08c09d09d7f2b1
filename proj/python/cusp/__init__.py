"""Fourier coefficients of level-one Hecke eigenforms and their simultaneous sign changes."""

from ._cusp import (
    CATALOG,
    IntegrityError,
    char_value,
    coeff_at_power,
    delta_coefficients,
    eigenform_coefficients,
    exponent_table,
    fit_main_term,
    gamma,
    normalized_coefficients,
    orthogonality_check,
    progression_census,
    rankin_partial,
    read_coeff_cache,
    sparse_census,
    write_coeff_cache,
    zeta,
)

__all__ = [
    "CATALOG",
    "IntegrityError",
    "char_value",
    "coeff_at_power",
    "delta_coefficients",
    "eigenform_coefficients",
    "exponent_table",
    "fit_main_term",
    "gamma",
    "normalized_coefficients",
    "orthogonality_check",
    "progression_census",
    "rankin_partial",
    "read_coeff_cache",
    "sparse_census",
    "write_coeff_cache",
    "zeta",
]
