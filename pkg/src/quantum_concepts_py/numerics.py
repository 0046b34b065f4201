"""
Uniform-grid quadrature and finite-difference kernels shared by the
state computations.

Integrals are complex-valued: the real and imaginary parts are
integrated separately with the same rule.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

import numpy as np
from scipy.integrate import simpson, trapezoid

from quantum_concepts_py.exceptions import BadSampleCount
from quantum_concepts_py.logs import get_logger

log = get_logger(Path(__file__).stem, level=logging.WARNING)


class QuadratureRule(str, Enum):
    SIMPSON = "simpson"
    TRAPEZOID = "trapezoid"


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    rule: QuadratureRule


def _check_samples(samples: np.ndarray, dx: float) -> None:
    if dx <= 0:
        raise ValueError(f"Grid spacing must be positive, got dx={dx}")
    if samples.ndim != 1:
        raise ValueError(f"Expected a one-dimensional sample array, got shape {samples.shape}")
    if samples.shape[0] < 3:
        raise BadSampleCount(f"At least 3 samples are required, got {samples.shape[0]}")


def quadrature(
    samples, dx: float, rule: QuadratureRule | str = QuadratureRule.SIMPSON
) -> QuadratureResult:
    """
    Integrate uniformly spaced samples with a composite rule.

    Parameters
    ----------
    samples : array_like
        Real or complex function values on a uniform grid
    dx : float
        Grid spacing
    rule : QuadratureRule or str
        ``simpson`` (requires an odd number of samples) or ``trapezoid``

    Returns
    -------
    QuadratureResult
        The integral and the rule used to compute it
    """
    rule = QuadratureRule(rule)
    samples = np.asarray(samples)
    _check_samples(samples, dx)

    if rule is QuadratureRule.SIMPSON:
        if samples.shape[0] % 2 == 0:
            raise BadSampleCount(
                f"Composite Simpson requires an odd number of samples, got {samples.shape[0]}"
            )
        integrator = simpson
    else:
        integrator = trapezoid

    real = integrator(np.real(samples), dx=dx)
    imag = integrator(np.imag(samples), dx=dx) if np.iscomplexobj(samples) else 0.0
    return QuadratureResult(value=complex(real, imag), rule=rule)


def integrate(samples, dx: float, rule: QuadratureRule | str = QuadratureRule.SIMPSON) -> complex:
    """Composite-rule approximation of the integral of ``samples`` over the grid."""
    return quadrature(samples, dx, rule).value


def integrate_nd(samples, spacings: list[float]) -> complex:
    """
    Tensor-grid composite Simpson over an N-D array of samples, one
    spacing per axis. The last axis is integrated first.
    """
    samples = np.asarray(samples)
    if samples.ndim != len(spacings):
        raise ValueError(
            f"Got {len(spacings)} spacings for a {samples.ndim}-dimensional sample array"
        )
    for axis_len in samples.shape:
        if axis_len < 3 or axis_len % 2 == 0:
            raise BadSampleCount(
                f"Composite Simpson requires an odd number (>= 3) of samples per axis, "
                f"got shape {samples.shape}"
            )
    real, imag = np.real(samples), np.imag(samples)
    for d in reversed(spacings):
        real = simpson(real, dx=d, axis=-1)
        imag = simpson(imag, dx=d, axis=-1)
    return complex(real, imag)


def integrate_2d(samples, dx: float, dy: float) -> complex:
    """Composite Simpson over a 2-D array; ``dx`` spaces rows, ``dy`` columns."""
    samples = np.asarray(samples)
    if samples.ndim != 2:
        raise ValueError(f"Expected a two-dimensional sample array, got shape {samples.shape}")
    return integrate_nd(samples, [dx, dy])


def central_derivative(samples, dx: float) -> np.ndarray:
    """
    First derivative of uniformly spaced samples.

    Second-order central differences in the interior and second-order
    one-sided stencils at both ends, so the output has the input's length.
    """
    samples = np.asarray(samples)
    _check_samples(samples, dx)
    return np.gradient(samples, dx, edge_order=2)
