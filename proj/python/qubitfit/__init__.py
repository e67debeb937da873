"""Two-qubit parameterized circuit as a trainable function approximator."""

from ._core import (
    CircuitParams,
    FitResult,
    ParseError,
    closed_form_expectation,
    cubic_coefficients,
    cubic_remainder,
    fhat,
    make_grid,
    max_pointwise_error,
    optimize,
    parse_params,
    performance_index,
    prepare_state,
    random_init,
    serialize_params,
    trig_form,
    verify,
)

__all__ = [
    "CircuitParams",
    "FitResult",
    "ParseError",
    "closed_form_expectation",
    "cubic_coefficients",
    "cubic_remainder",
    "fhat",
    "make_grid",
    "max_pointwise_error",
    "optimize",
    "parse_params",
    "performance_index",
    "prepare_state",
    "random_init",
    "serialize_params",
    "trig_form",
    "verify",
]
