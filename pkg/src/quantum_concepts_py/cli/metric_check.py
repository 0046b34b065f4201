"""
Run the metric-axiom property suites on seeded random samples: the
Hilbert-norm distance on grid-state triples, the indicator fuzzy metric
under the minimum t-norm, and the axioms of every t-norm.
"""

import functools
import logging
from pathlib import Path

import click
import numpy as np
import pandas as pd
from tqdm import tqdm

from quantum_concepts_py.cli.common import CliOptions, emit, emit_json, handle_errors, render_table
from quantum_concepts_py.fuzzy_baseline import (
    IndicatorFuzzyMetric,
    TNorm,
    check_km_axioms,
    check_tnorm_axioms,
    random_km_tuples,
)
from quantum_concepts_py.hilbert_states import (
    GridState,
    check_metric_axioms,
    hilbert_distance,
    random_state_triples,
)
from quantum_concepts_py.logs import get_logger
from quantum_concepts_py.numerics import integrate
from quantum_concepts_py.utils import AxiomReport

log = get_logger(Path(__file__).stem, level=logging.INFO)

MIN_KM_TUPLES = 100


class ZeroToleranceAtZero(IndicatorFuzzyMetric):
    """Indicator metric broken so that M(x, y, 0) = 1."""

    def __call__(self, x: float, y: float, t: float) -> int:
        if t == 0:
            return 1
        return super().__call__(x, y, t)


def skewed_distance(a: GridState, b: GridState) -> float:
    """Hilbert distance plus a term that only counts when a sits right of b."""
    return hilbert_distance(a, b) + 0.01 * max(0.0, _mean_position(a) - _mean_position(b))


def _mean_position(state: GridState) -> float:
    return integrate(state.grid.points * state.density(), state.grid.dx).real


def run_suites(trials: int, seed: int, inject_fault: str | None = None) -> list[AxiomReport]:
    """
    Run every suite with ``trials`` samples (at least 100 tuples for the
    fuzzy metric). ``inject_fault`` swaps in a broken metric: ``km1``
    breaks M(x, y, 0) = 0, ``symmetry`` skews the Hilbert distance.
    """
    progress = functools.partial(tqdm, disable=None, leave=False)

    distance = skewed_distance if inject_fault == "symmetry" else hilbert_distance
    triples = random_state_triples(trials, seed)
    reports = [
        check_metric_axioms(
            triples, distance=distance, progress=functools.partial(progress, desc="Hilbert metric")
        )
    ]

    fuzzy_metric = ZeroToleranceAtZero() if inject_fault == "km1" else IndicatorFuzzyMetric()
    tuples = random_km_tuples(max(trials, MIN_KM_TUPLES), seed)
    reports.append(
        check_km_axioms(
            fuzzy_metric,
            TNorm.MINIMUM,
            tuples,
            progress=functools.partial(progress, desc="Fuzzy metric"),
        )
    )

    unit_triples = np.random.default_rng(seed).uniform(0.0, 1.0, size=(trials, 3))
    reports.extend(check_tnorm_axioms(t, unit_triples) for t in TNorm)
    return reports


def reports_frame(reports: list[AxiomReport]) -> pd.DataFrame:
    rows = [
        {
            "suite": report.title,
            "axiom": result.name,
            "checked": result.checked,
            "status": "pass" if result.passed else "FAIL",
        }
        for report in reports
        for result in report.results
    ]
    return pd.DataFrame(rows)


@click.command(
    "metric-check",
    help="Check metric and fuzzy-metric axioms on seeded random samples. Exit 0 iff all pass.",
)
@click.option(
    "--trials",
    type=click.IntRange(min=1),
    default=1000,
    show_default=True,
    help="Number of random samples per suite",
)
@click.option(
    "--inject-fault",
    type=click.Choice(["km1", "symmetry"]),
    default=None,
    hidden=True,
)
@click.pass_obj
@click.pass_context
@handle_errors
def metric_check(ctx: click.Context, options: CliOptions, trials: int, inject_fault: str | None):
    if inject_fault:
        log.warning(f"Injecting fault '{inject_fault}'")
    reports = run_suites(trials, options.seed, inject_fault)

    if options.output_format == "json":
        emit_json(
            options,
            {
                "command": "metric-check",
                "trials": trials,
                "seed": options.seed,
                "suites": [
                    {
                        "title": report.title,
                        "passed": report.all_passed,
                        "axioms": [
                            {
                                "name": r.name,
                                "passed": r.passed,
                                "checked": r.checked,
                                "counterexample": r.counterexample,
                            }
                            for r in report.results
                        ],
                    }
                    for report in reports
                ],
            },
        )
    else:
        text = render_table(reports_frame(reports))
        for report in reports:
            for result in report.results:
                if not result.passed:
                    text += f"{result.name} counterexample: {result.counterexample}\n"
        emit(options, text)

    failed = [name for report in reports for name in report.failed()]
    if failed:
        log.error(f"Failing axioms: {', '.join(failed)}")
        ctx.exit(1)
