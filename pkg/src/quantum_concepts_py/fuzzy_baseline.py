"""
Fuzzy-metric baseline: t-norms, the indicator fuzzy metric built from a
classical metric, triangular memberships and a membership "classifier"
whose scores are normalized like the Born-rule classifier's so both can
be tabulated side by side.

Membership degrees carry no probabilistic meaning; the normalization is
only there for comparable tables.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from quantum_concepts_py.born_classifier import ClassificationResult, normalize_scores
from quantum_concepts_py.exceptions import DomainError, DuplicateName, EmptyRegistry, InvalidState
from quantum_concepts_py.logs import get_logger
from quantum_concepts_py.utils import AxiomReport, AxiomTally

log = get_logger(Path(__file__).stem, level=logging.WARNING)


class TNorm(str, Enum):
    """
    Continuous t-norms on [0, 1].

    - minimum (Goedel): min(a, b)
    - product: a * b
    - lukasiewicz: max(0, a + b - 1)
    """

    MINIMUM = "minimum"
    PRODUCT = "product"
    LUKASIEWICZ = "lukasiewicz"

    def __call__(self, a: float, b: float) -> float:
        return apply_tnorm(self, a, b)


def _check_unit_interval(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise DomainError(f"{name}={value!r} lies outside [0, 1]")


def apply_tnorm(t: TNorm | str, a: float, b: float) -> float:
    """Combine two degrees in [0, 1] with the given t-norm."""
    t = TNorm(t)
    _check_unit_interval("a", a)
    _check_unit_interval("b", b)
    if t is TNorm.MINIMUM:
        return min(a, b)
    if t is TNorm.PRODUCT:
        return a * b
    return max(0.0, a + b - 1.0)


def fuzzy_union(values: Iterable[float]) -> float:
    """Max-union of membership degrees: mu_{A u B}(x) = max(mu_A(x), mu_B(x))."""
    values = list(values)
    if not values:
        raise DomainError("fuzzy_union needs at least one membership degree")
    for i, v in enumerate(values):
        _check_unit_interval(f"values[{i}]", v)
    return max(values)


def absolute_difference(x: float, y: float) -> float:
    return abs(x - y)


@dataclass(frozen=True)
class IndicatorFuzzyMetric:
    """
    Fuzzy metric induced by a classical metric d:

        M(x, y, t) = 1 if d(x, y) < t else 0
    """

    base_metric: Callable[[float, float], float] = field(default=absolute_difference)

    def __call__(self, x: float, y: float, t: float) -> int:
        return indicator_metric(self, x, y, t)


def indicator_metric(m: IndicatorFuzzyMetric, x: float, y: float, t: float) -> int:
    if t < 0:
        raise DomainError(f"Tolerance t must be non-negative, got {t!r}")
    return 1 if m.base_metric(x, y) < t else 0


@dataclass(frozen=True)
class TriangularMembership:
    """Piecewise-linear membership peaking at ``center``, zero beyond ``half_width``."""

    center: float
    half_width: float

    def __post_init__(self):
        if not (math.isfinite(self.center) and math.isfinite(self.half_width)):
            raise InvalidState("center and half_width must be finite")
        if self.half_width <= 0:
            raise InvalidState(f"half_width must be positive, got {self.half_width}")


def membership(m: TriangularMembership, x: float) -> float:
    """max(0, 1 - |x - center| / half_width)"""
    return max(0.0, 1.0 - abs(x - m.center) / m.half_width)


def fuzzy_classify(
    memberships: Sequence[tuple[str, TriangularMembership]], x: float
) -> ClassificationResult:
    """
    Membership degrees at ``x`` as raw scores, normalized with the same
    closed-world rule and tie semantics as the Born-rule classifier.
    """
    if not memberships:
        raise EmptyRegistry("Fuzzy classification requires at least one membership")
    raw = {}
    for name, m in memberships:
        if name in raw:
            raise DuplicateName(f"Membership names must be unique, duplicated: {name!r}")
        raw[name] = membership(m, x)
    return normalize_scores(raw)


KM_AXIOMS = [
    "KM1 M(x,y,0)=0",
    "KM2 M(x,y,t)=1 for all t>0 iff x=y",
    "KM3 symmetry",
    "KM4 fuzzy triangle inequality",
    "KM5 monotone step in t",
]

TNORM_AXIOMS = ["associativity", "commutativity", "monotonicity", "unit"]


def random_km_tuples(
    n: int, seed: int, low: float = -10.0, high: float = 10.0, coincident_every: int = 10
) -> np.ndarray:
    """
    Seeded (x, y, z, t, s) tuples: points uniform in [low, high],
    tolerances uniform in (0, high - low]. Every ``coincident_every``-th
    tuple sets y = x and z = y so the identity axiom is exercised.
    """
    rng = np.random.default_rng(seed)
    points = rng.uniform(low, high, size=(n, 3))
    tolerances = (high - low) * (1.0 - rng.uniform(0.0, 1.0, size=(n, 2)))
    tuples = np.hstack([points, tolerances])
    if coincident_every:
        tuples[::coincident_every, 1] = tuples[::coincident_every, 0]
        tuples[::coincident_every, 2] = tuples[::coincident_every, 0]
    return tuples


def check_km_axioms(
    m: Callable[[float, float, float], float],
    tnorm: TNorm | str,
    samples,
    progress: Callable | None = None,
) -> AxiomReport:
    """
    Evaluate KM1-KM5 of a fuzzy metric on (x, y, z, t, s) tuples.

    KM5 (continuity in t) is checked structurally: M(x, y, .) must be
    non-decreasing and reach 1 once t exceeds the base distance. The
    indicator metric is a right-continuous step, not continuous, so this
    is what can actually hold for it.

    Parameters
    ----------
    m : callable
        Fuzzy metric M(x, y, t), e.g. an IndicatorFuzzyMetric
    tnorm : TNorm or str
        t-norm used in the fuzzy triangle inequality
    samples : array_like of shape (n, 5)
        (x, y, z, t, s) tuples, at least 100
    progress : callable, optional
        Wraps the iterable, e.g. ``tqdm``
    """
    tnorm = TNorm(tnorm)
    samples = np.asarray(samples, dtype=float)
    if samples.ndim != 2 or samples.shape[1] != 5:
        raise ValueError(f"Expected (n, 5) samples, got shape {samples.shape}")
    if samples.shape[0] < 100:
        raise ValueError(f"At least 100 sample tuples are required, got {samples.shape[0]}")
    distance = getattr(m, "base_metric", absolute_difference)

    tally = AxiomTally(KM_AXIOMS)
    rows = progress(samples) if progress else samples
    for i, (x, y, z, t, s) in enumerate(rows):
        m0 = m(x, y, 0.0)
        tally.record(KM_AXIOMS[0], m0 == 0, lambda: f"tuple {i}: M({x}, {y}, 0) = {m0}")

        # At t = d(x, y) any metric-induced M must drop below 1 for distinct points
        witness_t = distance(x, y) if x != y else t
        m_witness = m(x, y, witness_t)
        km2_ok = (m(x, y, t) == 1 and m_witness == 1) if x == y else m_witness < 1
        tally.record(
            KM_AXIOMS[1],
            km2_ok,
            lambda: f"tuple {i}: x={x}, y={y}, M(x,y,{witness_t})={m_witness}",
        )

        m_xy, m_yx = m(x, y, t), m(y, x, t)
        tally.record(KM_AXIOMS[2], m_xy == m_yx, lambda: f"tuple {i}: {m_xy} != {m_yx}")

        lhs = apply_tnorm(tnorm, m_xy, m(y, z, s))
        rhs = m(x, z, t + s)
        tally.record(
            KM_AXIOMS[3],
            lhs <= rhs,
            lambda: f"tuple {i}: M(x,y,{t}) * M(y,z,{s}) = {lhs} > M(x,z,{t + s}) = {rhs}",
        )

        reach = distance(x, y) + 1.0
        m_later, m_reach = m(x, y, t + s), m(x, y, reach)
        tally.record(
            KM_AXIOMS[4],
            m_xy <= m_later and m_reach == 1,
            lambda: f"tuple {i}: M(x,y,{t})={m_xy}, M(x,y,{t + s})={m_later}, "
            f"M(x,y,{reach})={m_reach}",
        )
    return tally.report(f"Fuzzy metric axioms under the {tnorm.value} t-norm")


def check_tnorm_axioms(
    t: TNorm | str, triples, tolerance: float = 1e-12
) -> AxiomReport:
    """
    Check associativity, commutativity, monotonicity and the unit law of
    a t-norm on (a, b, c) triples in [0, 1].
    """
    t = TNorm(t)
    tally = AxiomTally(TNORM_AXIOMS)
    for i, (a, b, c) in enumerate(np.asarray(triples, dtype=float)):
        left = apply_tnorm(t, apply_tnorm(t, a, b), c)
        right = apply_tnorm(t, a, apply_tnorm(t, b, c))
        tally.record(
            "associativity",
            abs(left - right) <= tolerance,
            lambda: f"triple {i}: {left} != {right}",
        )
        ab, ba = apply_tnorm(t, a, b), apply_tnorm(t, b, a)
        tally.record("commutativity", abs(ab - ba) <= tolerance, lambda: f"triple {i}: {ab} != {ba}")
        # b <= max(b, c) must not decrease a * b
        hi = apply_tnorm(t, a, max(b, c))
        tally.record(
            "monotonicity", ab <= hi + tolerance, lambda: f"triple {i}: {ab} > {hi}"
        )
        unit = apply_tnorm(t, a, 1.0)
        tally.record("unit", abs(unit - a) <= tolerance, lambda: f"triple {i}: {a} * 1 = {unit}")
    return tally.report(f"{t.value} t-norm axioms")
