"""
Born-rule classification of an object state against a registry of
concept states, plus complex superpositions and the interference they
produce in overlap scores.
"""

import logging
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np

from quantum_concepts_py.exceptions import DuplicateName, EmptyRegistry, GridMismatch, ZeroVector
from quantum_concepts_py.hilbert_states import (
    GaussianState,
    GridState,
    State,
    as_grid_pair,
    inner_product,
)
from quantum_concepts_py.logs import get_logger
from quantum_concepts_py.numerics import integrate

log = get_logger(Path(__file__).stem, level=logging.WARNING)

TIE_TOLERANCE = 1e-12
ZERO_NORM = 1e-12


@dataclass(frozen=True)
class Concept:
    name: str
    state: State

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name:
            raise ValueError(f"Concept name must be a non-empty string, got {self.name!r}")


@dataclass(frozen=True)
class Tie:
    """Marker for a classification whose best probability is shared."""

    names: tuple[str, ...]

    def __str__(self) -> str:
        return "TIE{" + ",".join(self.names) + "}"


@dataclass(frozen=True)
class ScoreEntry:
    name: str
    raw_score: float
    probability: float


@dataclass(frozen=True)
class ClassificationResult:
    """
    Per-concept raw scores and normalized probabilities, sorted by
    concept name. ``winner`` is a concept name or a Tie.
    """

    entries: tuple[ScoreEntry, ...]
    winner: str | Tie

    @property
    def is_tie(self) -> bool:
        return isinstance(self.winner, Tie)

    def probability(self, name: str) -> float:
        return self._entry(name).probability

    def raw_score(self, name: str) -> float:
        return self._entry(name).raw_score

    def _entry(self, name: str) -> ScoreEntry:
        for entry in self.entries:
            if entry.name == name:
                return entry
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "entries": [
                {"name": e.name, "raw_score": e.raw_score, "probability": e.probability}
                for e in self.entries
            ],
            "winner": str(self.winner),
            "tie": self.is_tie,
        }


def _check_registry(registry: Sequence[Concept]) -> None:
    if not registry:
        raise EmptyRegistry("Classification requires at least one concept")
    names = [c.name for c in registry]
    duplicates = sorted({n for n in names if names.count(n) > 1})
    if duplicates:
        raise DuplicateName(f"Concept names must be unique, duplicated: {duplicates}")


def normalize_scores(raw: Mapping[str, float]) -> ClassificationResult:
    """
    Normalize raw scores over the supplied names only (closed world).

    Exact ties (difference below TIE_TOLERANCE) are reported as a Tie
    listing the tied names in lexicographic order. If every score is 0,
    all probabilities are 0 and the winner is a Tie over all names.
    """
    if not raw:
        raise EmptyRegistry("Classification requires at least one concept")
    names = sorted(raw)
    total = math.fsum(raw[n] for n in names)
    if total > 0:
        probabilities = {n: raw[n] / total for n in names}
    else:
        log.debug("All raw scores are zero; reporting a tie over every concept")
        probabilities = {n: 0.0 for n in names}

    best = max(probabilities.values())
    tied = tuple(n for n in names if best - probabilities[n] < TIE_TOLERANCE)
    winner = tied[0] if len(tied) == 1 else Tie(names=tied)
    entries = tuple(ScoreEntry(n, raw[n], probabilities[n]) for n in names)
    return ClassificationResult(entries=entries, winner=winner)


def raw_score(concept: Concept, obj: State) -> float:
    """
    Unnormalized Born-rule score |<psi_C|psi_obj>|^2, closed form for two
    Gaussians and quadrature otherwise.
    """
    amplitude = inner_product(concept.state, obj)
    return abs(amplitude) ** 2


def classify(registry: Sequence[Concept], obj: State) -> ClassificationResult:
    """Classify ``obj`` against every concept of the registry by the Born rule."""
    _check_registry(registry)
    raw = {concept.name: raw_score(concept, obj) for concept in registry}
    result = normalize_scores(raw)
    log.debug(f"Classified object against {len(registry)} concept(s): winner {result.winner}")
    return result


@dataclass(frozen=True)
class Superposition:
    """Complex linear combination of grid states sharing one grid."""

    components: tuple[tuple[complex, GridState], ...]

    def realize(self) -> GridState:
        return superpose(self.components)


def superpose(components: Sequence[tuple[complex, GridState]]) -> GridState:
    """
    Pointwise complex linear combination of grid states, renormalized.

    Raises
    ------
    GridMismatch
        If the components do not share one grid
    ZeroVector
        If every coefficient is zero or the components cancel
    """
    if not components:
        raise ZeroVector("A superposition needs at least one component")
    grid = components[0][1].grid
    if any(state.grid != grid for _, state in components):
        raise GridMismatch("Superposed states must share one grid")
    if all(coefficient == 0 for coefficient, _ in components):
        raise ZeroVector("All superposition coefficients are zero")

    amplitudes = np.zeros(grid.n_points, dtype=complex)
    for coefficient, state in components:
        amplitudes += complex(coefficient) * state.amplitudes

    norm = math.sqrt(integrate(np.abs(amplitudes) ** 2, grid.dx).real)
    if norm <= ZERO_NORM:
        raise ZeroVector(f"Superposition cancelled to the zero vector (norm {norm!r})")
    return GridState(grid=grid, amplitudes=amplitudes / norm)


def _as_grid(state: State, like: GridState) -> GridState:
    if isinstance(state, GaussianState):
        return as_grid_pair(like, state)[1]
    return state


def interference_demo(
    obj: State, a: GridState, b: GridState, phase: float = math.pi
) -> tuple[float, float]:
    """
    Scores of ``obj`` against the in-phase superposition a + b and the
    dephased superposition a + e^{i phase} b.

    Returns
    -------
    tuple of float
        (constructive, dephased)
    """
    obj = _as_grid(obj, a)
    in_phase = superpose([(1.0, a), (1.0, b)])
    dephased = superpose([(1.0, a), (np.exp(1j * phase), b)])
    probe = Concept(name="object", state=obj)
    return raw_score(probe, in_phase), raw_score(probe, dephased)


def phase_sweep(
    obj: State, a: GridState, b: GridState, phases: Sequence[float]
) -> list[tuple[float, float]]:
    """Score of ``obj`` against a + e^{i phase} b for each phase."""
    obj = _as_grid(obj, a)
    probe = Concept(name="object", state=obj)
    return [
        (phase, raw_score(probe, superpose([(1.0, a), (np.exp(1j * phase), b)])))
        for phase in phases
    ]
