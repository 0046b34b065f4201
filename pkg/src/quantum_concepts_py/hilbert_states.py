"""
Concept states, their inner products, the Hilbert-norm distance and
the position/momentum uncertainty product (hbar = 1).

Two representations are supported:
- GaussianState: analytic normalized Gaussian wavefunction (mu, sigma)
- GridState: complex amplitudes sampled on a uniform Grid, normalized
  under composite Simpson quadrature

Operations taking "a state" accept either form. When a Gaussian meets a
GridState it is discretized onto the GridState's grid first.
"""

import logging
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Union

import numpy as np

from quantum_concepts_py.exceptions import GridMismatch, GridTooNarrow, InvalidState
from quantum_concepts_py.logs import get_logger
from quantum_concepts_py.numerics import central_derivative, integrate
from quantum_concepts_py.utils import AxiomReport, AxiomTally

log = get_logger(Path(__file__).stem, level=logging.WARNING)

MIN_SIGMA = 1e-8
# exp() arguments below this underflow to subnormals; report exactly 0 instead
UNDERFLOW_EXPONENT = -700.0
# Grid must cover mu +/- this many sigma for discretize
MIN_SPAN_SIGMAS = 6.0
DEFAULT_SPAN_SIGMAS = 8.0
DEFAULT_N_POINTS = 4097
NORM_TOLERANCE = 1e-9


@dataclass(frozen=True)
class GaussianState:
    """Normalized Gaussian wavefunction centred on ``mu`` with width ``sigma``."""

    mu: float
    sigma: float

    def __post_init__(self):
        if not (math.isfinite(self.mu) and math.isfinite(self.sigma)):
            raise InvalidState(f"mu and sigma must be finite, got mu={self.mu}, sigma={self.sigma}")
        if self.sigma <= 0:
            raise InvalidState(f"sigma must be positive, got {self.sigma}")
        if self.sigma < MIN_SIGMA:
            raise InvalidState(
                f"sigma={self.sigma} is below {MIN_SIGMA}; delta-like states are not representable"
            )


@dataclass(frozen=True)
class Grid:
    """Uniform grid of ``n_points`` nodes on [x_min, x_max]."""

    x_min: float
    x_max: float
    n_points: int

    def __post_init__(self):
        if not self.x_max > self.x_min:
            raise InvalidState(f"x_max ({self.x_max}) must exceed x_min ({self.x_min})")
        if self.n_points < 3 or self.n_points % 2 == 0:
            raise InvalidState(
                f"n_points must be odd and >= 3 for composite Simpson, got {self.n_points}"
            )

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / (self.n_points - 1)

    @property
    def points(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.n_points)

    def covers(self, lower: float, upper: float) -> bool:
        return self.x_min <= lower and self.x_max >= upper


@dataclass(frozen=True, eq=False)
class GridState:
    """
    Complex amplitudes on a Grid. The quadrature of |amplitude|^2 over
    the grid equals 1 within NORM_TOLERANCE; use ``from_amplitudes`` to
    normalize arbitrary samples.
    """

    grid: Grid
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        amplitudes = np.array(self.amplitudes, dtype=complex)
        if amplitudes.shape != (self.grid.n_points,):
            raise InvalidState(
                f"Expected {self.grid.n_points} amplitudes, got shape {amplitudes.shape}"
            )
        if not np.all(np.isfinite(amplitudes)):
            raise InvalidState("Amplitudes must be finite")
        amplitudes.setflags(write=False)
        object.__setattr__(self, "amplitudes", amplitudes)
        norm = self.norm()
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise InvalidState(f"GridState must be normalized, quadrature norm is {norm!r}")

    @classmethod
    def from_amplitudes(cls, grid: Grid, amplitudes) -> "GridState":
        """Build a GridState from arbitrary samples by renormalizing them."""
        amplitudes = np.asarray(amplitudes, dtype=complex)
        norm_sq = integrate(np.abs(amplitudes) ** 2, grid.dx).real
        if not norm_sq > 0:
            raise InvalidState("Cannot normalize an all-zero amplitude vector")
        factor = 1.0 / math.sqrt(norm_sq)
        log.debug(f"Renormalizing grid amplitudes by {factor!r}")
        return cls(grid=grid, amplitudes=amplitudes * factor)

    def norm(self) -> float:
        return math.sqrt(integrate(np.abs(self.amplitudes) ** 2, self.grid.dx).real)

    def with_global_phase(self, phase: float) -> "GridState":
        return GridState(grid=self.grid, amplitudes=self.amplitudes * np.exp(1j * phase))

    def density(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2


State = Union[GaussianState, GridState]


@dataclass(frozen=True)
class UncertaintyReport:
    delta_x: float
    delta_p: float
    product: float


def evaluate_gaussian(state: GaussianState, x) -> complex | np.ndarray:
    """
    Evaluate the normalized Gaussian wavefunction

        psi(x) = (2 pi sigma^2)^(-1/4) exp(-(x - mu)^2 / (4 sigma^2))

    so that |psi|^2 is the normal density with mean mu and variance
    sigma^2. This is the wavefunction whose overlaps inner_product_gaussian
    computes in closed form.

    Accepts a scalar or an array of positions; the result is complex with
    a zero imaginary part.
    """
    x = np.asarray(x, dtype=float)
    prefactor = (2 * math.pi * state.sigma**2) ** -0.25
    values = prefactor * np.exp(-((x - state.mu) ** 2) / (4 * state.sigma**2))
    values = values.astype(complex)
    if values.ndim == 0:
        return complex(values)
    return values


def default_grid(
    *states: GaussianState,
    n_sigma: float = DEFAULT_SPAN_SIGMAS,
    n_points: int = DEFAULT_N_POINTS,
) -> Grid:
    """
    Grid spanning the union of [mu - n_sigma*sigma, mu + n_sigma*sigma]
    over all given states.
    """
    if not states:
        raise ValueError("At least one state is required to build a default grid")
    x_min = min(s.mu - n_sigma * s.sigma for s in states)
    x_max = max(s.mu + n_sigma * s.sigma for s in states)
    grid = Grid(x_min=x_min, x_max=x_max, n_points=n_points)
    log.debug(f"Default grid {grid} for {len(states)} state(s)")
    return grid


def discretize(state: GaussianState, grid: Grid) -> GridState:
    """
    Sample a Gaussian state on a grid and renormalize under quadrature.

    Raises
    ------
    GridTooNarrow
        If the grid does not cover mu +/- 6 sigma
    """
    lower = state.mu - MIN_SPAN_SIGMAS * state.sigma
    upper = state.mu + MIN_SPAN_SIGMAS * state.sigma
    if not grid.covers(lower, upper):
        raise GridTooNarrow(
            f"Grid [{grid.x_min}, {grid.x_max}] does not cover [{lower}, {upper}] "
            f"required for state (mu={state.mu}, sigma={state.sigma})"
        )
    return GridState.from_amplitudes(grid, evaluate_gaussian(state, grid.points))


def inner_product_gaussian(a: GaussianState, b: GaussianState) -> float:
    """
    Closed-form overlap amplitude of two normalized real Gaussians:

        sqrt(2 sa sb / (sa^2 + sb^2)) * exp(-(ma - mb)^2 / (4 (sa^2 + sb^2)))

    Its square is the Born-rule score.
    """
    var_sum = a.sigma**2 + b.sigma**2
    exponent = -((a.mu - b.mu) ** 2) / (4 * var_sum)
    if exponent < UNDERFLOW_EXPONENT:
        return 0.0
    prefactor = math.sqrt(2 * a.sigma * b.sigma / var_sum)
    return prefactor * math.exp(exponent)


def _check_same_grid(a: GridState, b: GridState) -> None:
    if a.grid != b.grid:
        raise GridMismatch(f"States live on different grids: {a.grid} vs {b.grid}")


def inner_product_grid(a: GridState, b: GridState) -> complex:
    """Quadrature of conj(a(x)) * b(x) over the shared grid."""
    _check_same_grid(a, b)
    return integrate(np.conj(a.amplitudes) * b.amplitudes, a.grid.dx)


def as_grid_pair(a: State, b: State) -> tuple[GridState, GridState]:
    """
    Bring two states onto a common grid. A Gaussian paired with a
    GridState is discretized onto that GridState's grid.
    """
    if isinstance(a, GridState) and isinstance(b, GridState):
        _check_same_grid(a, b)
        return a, b
    if isinstance(a, GridState):
        return a, discretize(b, a.grid)
    if isinstance(b, GridState):
        return discretize(a, b.grid), b
    grid = default_grid(a, b)
    return discretize(a, grid), discretize(b, grid)


def inner_product(a: State, b: State) -> complex:
    """<a|b> using the closed form for two Gaussians and quadrature otherwise."""
    if isinstance(a, GaussianState) and isinstance(b, GaussianState):
        return complex(inner_product_gaussian(a, b))
    a, b = as_grid_pair(a, b)
    return inner_product_grid(a, b)


def _difference_norm(a: GridState, b_amplitudes: np.ndarray) -> float:
    diff = a.amplitudes - b_amplitudes
    return math.sqrt(max(0.0, integrate(np.abs(diff) ** 2, a.grid.dx).real))


def hilbert_distance(a: State, b: State) -> float:
    """
    Norm of the difference ||a - b||, equal to sqrt(2 - 2 Re<a|b>) for
    normalized states. Not invariant under a global phase.
    """
    if isinstance(a, GaussianState) and isinstance(b, GaussianState):
        return math.sqrt(max(0.0, 2.0 - 2.0 * inner_product_gaussian(a, b)))
    a, b = as_grid_pair(a, b)
    # Computed from the difference vector directly: exact zero for equal states
    return _difference_norm(a, b.amplitudes)


def phase_invariant_distance(a: State, b: State) -> float:
    """
    sqrt(2 - 2 |<a|b>|): the distance after aligning the global phase of
    ``b`` with ``a``. Zero iff the states agree up to a global phase.
    """
    if isinstance(a, GaussianState) and isinstance(b, GaussianState):
        return hilbert_distance(a, b)
    a, b = as_grid_pair(a, b)
    overlap = inner_product_grid(a, b)
    if abs(overlap) == 0.0:
        return math.sqrt(2.0)
    alignment = np.conj(overlap) / abs(overlap)
    return _difference_norm(a, b.amplitudes * alignment)


def uncertainty_gaussian(state: GaussianState) -> UncertaintyReport:
    """Analytic position and momentum spreads of a Gaussian (hbar = 1)."""
    delta_x = state.sigma
    delta_p = 1.0 / (2 * state.sigma)
    # Gaussians saturate the bound exactly
    return UncertaintyReport(delta_x=delta_x, delta_p=delta_p, product=0.5)


def uncertainty_grid(state: GridState) -> UncertaintyReport:
    """
    Position and momentum spreads of a grid state by quadrature, with
    the momentum operator -i d/dx applied through central differences.
    """
    x = state.grid.points
    dx = state.grid.dx
    psi = state.amplitudes
    density = np.abs(psi) ** 2

    mean_x = integrate(x * density, dx).real
    var_x = integrate((x - mean_x) ** 2 * density, dx).real

    dpsi = central_derivative(psi, dx)
    mean_p = (-1j * integrate(np.conj(psi) * dpsi, dx)).real
    mean_p_sq = integrate(np.abs(dpsi) ** 2, dx).real
    var_p = mean_p_sq - mean_p**2

    delta_x = math.sqrt(max(0.0, var_x))
    delta_p = math.sqrt(max(0.0, var_p))
    return UncertaintyReport(delta_x=delta_x, delta_p=delta_p, product=delta_x * delta_p)


METRIC_AXIOMS = ["non-negativity", "identity", "symmetry", "triangle inequality"]


def random_state_triples(
    n: int,
    seed: int,
    grid: Grid | None = None,
    identical_every: int = 10,
) -> list[tuple[GridState, GridState, GridState]]:
    """
    Seeded random triples of complex grid states: Gaussians with mu in
    [-5, 10] and sigma in [0.5, 2], given a random momentum kick and
    global phase. Every ``identical_every``-th triple repeats its first
    state as the second so the identity axiom is exercised.
    """
    grid = grid or Grid(x_min=-25.0, x_max=30.0, n_points=1025)
    rng = np.random.default_rng(seed)
    x = grid.points

    def draw() -> GridState:
        base = GaussianState(mu=rng.uniform(-5, 10), sigma=rng.uniform(0.5, 2.0))
        kick, phase = rng.uniform(-2, 2), rng.uniform(0, 2 * math.pi)
        amplitudes = evaluate_gaussian(base, x) * np.exp(1j * (kick * x + phase))
        return GridState.from_amplitudes(grid, amplitudes)

    triples = []
    for i in range(n):
        a = draw()
        b = a if identical_every and i % identical_every == 0 else draw()
        triples.append((a, b, draw()))
    return triples


def check_metric_axioms(
    triples,
    distance: Callable[[State, State], float] = hilbert_distance,
    tolerance: float = 1e-9,
    symmetry_tolerance: float = 1e-12,
    progress: Callable | None = None,
) -> AxiomReport:
    """
    Check non-negativity, identity of indiscernibles, symmetry and the
    triangle inequality of ``distance`` on (a, b, c) state triples.

    Parameters
    ----------
    triples : iterable of (GridState, GridState, GridState)
    distance : callable
        Distance under test, hilbert_distance by default
    tolerance : float
        Slack for the identity and triangle checks
    symmetry_tolerance : float
        Allowed |d(a, b) - d(b, a)|
    progress : callable, optional
        Wraps the iterable, e.g. ``tqdm``
    """
    tally = AxiomTally(METRIC_AXIOMS)
    iterable = progress(triples) if progress else triples
    for i, (a, b, c) in enumerate(iterable):
        d_ab, d_ba = distance(a, b), distance(b, a)
        d_bc, d_ac = distance(b, c), distance(a, c)

        tally.record(
            "non-negativity",
            min(d_ab, d_bc, d_ac) >= 0,
            lambda: f"triple {i}: d(a,b)={d_ab!r}, d(b,c)={d_bc!r}, d(a,c)={d_ac!r}",
        )
        same = np.max(np.abs(a.amplitudes - b.amplitudes)) <= 1e-12
        tally.record(
            "identity",
            d_ab <= tolerance if same else d_ab > 0,
            lambda: f"triple {i}: equal vectors={same}, d(a,b)={d_ab!r}",
        )
        tally.record(
            "symmetry",
            abs(d_ab - d_ba) <= symmetry_tolerance,
            lambda: f"triple {i}: d(a,b)={d_ab!r} != d(b,a)={d_ba!r}",
        )
        tally.record(
            "triangle inequality",
            d_ac <= d_ab + d_bc + tolerance,
            lambda: f"triple {i}: d(a,c)={d_ac!r} > d(a,b)+d(b,c)={d_ab + d_bc!r}",
        )
    return tally.report("Hilbert-norm metric axioms")
