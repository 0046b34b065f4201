"""
Emit plot data as CSV: the concept and object wavefunctions, or their
probability densities together with the pointwise object/concept
overlap psi_obj(x) * psi_C(x) used to shade shared probability mass.
"""

import logging
from pathlib import Path

import click
import pandas as pd

from quantum_concepts_py.cli.common import (
    CliOptions,
    ValidationFailure,
    emit,
    handle_errors,
    object_options,
    resolve_object,
    to_csv,
)
from quantum_concepts_py.config import ConceptConfig
from quantum_concepts_py.hilbert_states import GaussianState, discretize
from quantum_concepts_py.logs import get_logger

log = get_logger(Path(__file__).stem, level=logging.INFO)

OBJECT_LABEL = "object"


def figure_frame(config: ConceptConfig, obj: GaussianState, which: str) -> pd.DataFrame:
    """
    One row per grid node. ``wavefunctions`` gives psi_<name> columns,
    ``densities`` gives density_<name> and overlap_<concept> columns.
    """
    names = [name for name, _ in config.concepts]
    if OBJECT_LABEL in names:
        raise ValidationFailure(f"concept name '{OBJECT_LABEL}' is reserved for the object column")

    grid = config.resolved_grid(obj)
    states = {name: discretize(state, grid) for name, state in config.concepts}
    states[OBJECT_LABEL] = discretize(obj, grid)
    log.info(f"Sampling {len(states)} state(s) on {grid}")

    columns = {"x": grid.points}
    if which == "wavefunctions":
        for name, state in states.items():
            columns[f"psi_{name}"] = state.amplitudes.real
    else:
        for name, state in states.items():
            columns[f"density_{name}"] = state.density()
        psi_obj = states[OBJECT_LABEL].amplitudes
        for name in names:
            columns[f"overlap_{name}"] = (psi_obj.conj() * states[name].amplitudes).real
    return pd.DataFrame(columns)


@click.command(
    "emit-figure",
    help="Write wavefunction or probability-density plot data as CSV.",
)
@click.option(
    "--which",
    type=click.Choice(["wavefunctions", "densities"]),
    default="densities",
    show_default=True,
    help="Columns to emit",
)
@object_options
@click.pass_obj
@handle_errors
def emit_figure(options: CliOptions, which: str, object_mu: float, object_sigma: float):
    config = options.load_config()
    obj = resolve_object(config, object_mu, object_sigma)
    frame = figure_frame(config, obj, which)
    emit(options, to_csv(frame, index=False))
