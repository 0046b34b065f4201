"""
Separable tensor-product states over several feature axes, and the
Gaussian-overlap kernel: squared overlaps of Gaussian states form a
Gram matrix, and for equal widths they are exactly RBF kernel values
with doubled bandwidth.
"""

import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple, Sequence

import numpy as np
import pandas as pd

from quantum_concepts_py.exceptions import DimensionMismatch, DuplicateName, InvalidState
from quantum_concepts_py.hilbert_states import (
    UNDERFLOW_EXPONENT,
    GaussianState,
    Grid,
    discretize,
    inner_product_gaussian,
)
from quantum_concepts_py.logs import get_logger
from quantum_concepts_py.numerics import integrate_nd

log = get_logger(Path(__file__).stem, level=logging.WARNING)

PSD_TOLERANCE = 1e-9


@dataclass(frozen=True)
class ProductState:
    """One GaussianState per feature axis; the joint state is their tensor product."""

    factors: tuple[GaussianState, ...]

    def __post_init__(self):
        factors = tuple(self.factors)
        if not factors:
            raise InvalidState("A product state needs at least one factor")
        if not all(isinstance(f, GaussianState) for f in factors):
            raise InvalidState("Product state factors must be GaussianState instances")
        object.__setattr__(self, "factors", factors)

    @property
    def n_axes(self) -> int:
        return len(self.factors)


def _check_axes(a: ProductState, b: ProductState) -> None:
    if a.n_axes != b.n_axes:
        raise DimensionMismatch(f"Product states have {a.n_axes} and {b.n_axes} axes")


def product_overlap(a: ProductState, b: ProductState) -> float:
    """Squared overlap of two product states: the product of per-axis squared overlaps."""
    _check_axes(a, b)
    return math.prod(inner_product_gaussian(fa, fb) ** 2 for fa, fb in zip(a.factors, b.factors))


def tensor_amplitudes(state: ProductState, grids: Sequence[Grid]) -> np.ndarray:
    """Joint amplitudes on the tensor grid, shape (n_points per axis ...)."""
    if len(grids) != state.n_axes:
        raise DimensionMismatch(f"Got {len(grids)} grids for {state.n_axes} axes")
    amplitudes = np.ones(())
    for factor, grid in zip(state.factors, grids):
        amplitudes = np.multiply.outer(amplitudes, discretize(factor, grid).amplitudes)
    return amplitudes


def product_overlap_quadrature(a: ProductState, b: ProductState, grids: Sequence[Grid]) -> float:
    """|<a|b>|^2 by tensor-grid Simpson quadrature of the joint amplitudes."""
    _check_axes(a, b)
    joint = np.conj(tensor_amplitudes(a, grids)) * tensor_amplitudes(b, grids)
    return abs(integrate_nd(joint, [g.dx for g in grids])) ** 2


def rbf_kernel(x: float, center: GaussianState) -> float:
    """k(x, c) = exp(-(x - mu_c)^2 / (2 sigma_c^2))"""
    exponent = -((x - center.mu) ** 2) / (2 * center.sigma**2)
    if exponent < UNDERFLOW_EXPONENT:
        return 0.0
    return math.exp(exponent)


@dataclass(frozen=True, eq=False)
class KernelMatrix:
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]
    entries: np.ndarray

    def eigenvalues(self) -> np.ndarray:
        if self.row_labels != self.col_labels:
            raise ValueError("Eigenvalues are only defined for a square matrix over one state set")
        return np.linalg.eigvalsh(self.entries)

    @property
    def min_eigenvalue(self) -> float:
        return float(np.min(self.eigenvalues()))

    def is_psd(self, tolerance: float = PSD_TOLERANCE) -> bool:
        return self.min_eigenvalue >= -tolerance

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            self.entries, index=list(self.row_labels), columns=list(self.col_labels)
        )


def kernel_matrix(states: Sequence[tuple[str, GaussianState]]) -> KernelMatrix:
    """
    Gram matrix of squared closed-form overlaps between named Gaussian
    states, in input order.

    Raises
    ------
    DuplicateName
        If two states share a name
    """
    if not states:
        raise ValueError("kernel_matrix needs at least one state")
    labels = tuple(name for name, _ in states)
    if len(set(labels)) != len(labels):
        raise DuplicateName(f"State names must be unique, got {list(labels)}")

    n = len(states)
    entries = np.empty((n, n))
    for i in range(n):
        entries[i, i] = inner_product_gaussian(states[i][1], states[i][1]) ** 2
        for j in range(i + 1, n):
            value = inner_product_gaussian(states[i][1], states[j][1]) ** 2
            entries[i, j] = entries[j, i] = value
    entries.setflags(write=False)
    log.debug(f"Kernel matrix over {n} state(s)")
    return KernelMatrix(row_labels=labels, col_labels=labels, entries=entries)


class RbfDecomposition(NamedTuple):
    overlap_sq: float
    rbf_form: float
    prefactor: float


def overlap_equals_rbf_check(
    a: GaussianState, b: GaussianState, tolerance: float = 1e-12
) -> RbfDecomposition:
    """
    Split the squared Gaussian overlap into a width prefactor times an
    RBF kernel with bandwidth sigma^2 = sigma_a^2 + sigma_b^2:

        |<a|b>|^2 = 2 sa sb / (sa^2 + sb^2) * k(mu_a, N(mu_b, sqrt(sa^2 + sb^2)))

    With equal widths the prefactor is exactly 1.
    """
    overlap_sq = inner_product_gaussian(a, b) ** 2
    prefactor = 2 * a.sigma * b.sigma / (a.sigma**2 + b.sigma**2)
    bandwidth = GaussianState(mu=b.mu, sigma=math.sqrt(a.sigma**2 + b.sigma**2))
    rbf_form = rbf_kernel(a.mu, bandwidth)
    if abs(overlap_sq - prefactor * rbf_form) > tolerance:
        raise ArithmeticError(
            f"Squared overlap {overlap_sq!r} differs from prefactor * rbf "
            f"{prefactor * rbf_form!r} by more than {tolerance}"
        )
    return RbfDecomposition(overlap_sq=overlap_sq, rbf_form=rbf_form, prefactor=prefactor)
