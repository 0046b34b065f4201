"""
Interference report: the object's score against the in-phase and the
dephased superposition of the first two configured concepts.
"""

import logging
import math
from pathlib import Path

import click
import numpy as np
import pandas as pd

from quantum_concepts_py.born_classifier import Concept, interference_demo, phase_sweep, raw_score
from quantum_concepts_py.cli.common import (
    CliOptions,
    ValidationFailure,
    config_document,
    emit,
    emit_json,
    handle_errors,
    object_options,
    render_table,
    resolve_object,
)
from quantum_concepts_py.hilbert_states import discretize
from quantum_concepts_py.logs import get_logger
from quantum_concepts_py.utils import format_float, round_float

log = get_logger(Path(__file__).stem, level=logging.INFO)


@click.command(
    "interference",
    help="Score the object against in-phase and dephased superpositions of two concepts.",
)
@click.option(
    "--phase",
    type=float,
    default=math.pi,
    show_default="pi",
    help="Relative phase (radians) applied to the second concept",
)
@click.option(
    "--sweep-points",
    type=click.IntRange(min=0),
    default=0,
    help="Also report scores at this many phases evenly spaced over [0, pi]",
)
@object_options
@click.pass_obj
@handle_errors
def interference(
    options: CliOptions,
    phase: float,
    sweep_points: int,
    object_mu: float,
    object_sigma: float,
):
    config = options.load_config()
    if len(config.concepts) < 2:
        raise ValidationFailure("interference needs at least two concepts in the configuration")
    obj = resolve_object(config, object_mu, object_sigma)

    grid = config.resolved_grid(obj)
    (name_a, state_a), (name_b, state_b) = config.concepts[:2]
    a, b = discretize(state_a, grid), discretize(state_b, grid)
    subject = discretize(obj, grid)
    log.info(f"Superposing {name_a} and {name_b} on {grid}")

    constructive, dephased = interference_demo(subject, a, b, phase)
    singles = {
        name_a: raw_score(Concept(name_a, a), subject),
        name_b: raw_score(Concept(name_b, b), subject),
    }
    sweep = []
    if sweep_points:
        sweep = phase_sweep(subject, a, b, np.linspace(0.0, math.pi, sweep_points))

    if options.output_format == "json":
        emit_json(
            options,
            {
                "command": "interference",
                "config": config_document(config, obj),
                "concepts": [name_a, name_b],
                "phase": phase,
                "constructive": round_float(constructive),
                "dephased": round_float(dephased),
                "single_scores": {k: round_float(v) for k, v in singles.items()},
                "sweep": [{"phase": p, "score": round_float(s)} for p, s in sweep],
            },
        )
        return

    frame = pd.DataFrame(
        {
            "superposition": [f"{name_a} + {name_b}", f"{name_a} + e^(i phase) {name_b}"],
            "score": [constructive, dephased],
        }
    )
    text = render_table(frame)
    text += f"phase: {format_float(phase)}\n"
    for name, score in singles.items():
        text += f"single {name}: {format_float(score)}\n"
    if sweep:
        text += render_table(pd.DataFrame(sweep, columns=["phase", "score"]))
    emit(options, text)
