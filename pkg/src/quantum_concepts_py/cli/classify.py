"""
Classify an object state against the configured concepts by the Born
rule and report raw overlap scores with normalized probabilities.
"""

import logging
from pathlib import Path

import click
import pandas as pd

from quantum_concepts_py.born_classifier import ClassificationResult, Concept, classify
from quantum_concepts_py.cli.common import (
    CliOptions,
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


def result_frame(result: ClassificationResult) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "concept": [e.name for e in result.entries],
            "raw_score": [e.raw_score for e in result.entries],
            "probability": [e.probability for e in result.entries],
        }
    )


def result_document(result: ClassificationResult) -> dict:
    doc = result.to_dict()
    for entry in doc["entries"]:
        entry["raw_score"] = round_float(entry["raw_score"])
        entry["probability"] = round_float(entry["probability"])
    return doc


@click.command(
    "classify",
    help="Classify an object against the configured concepts using Born-rule overlaps.",
)
@object_options
@click.pass_obj
@handle_errors
def classify_object(options: CliOptions, object_mu: float, object_sigma: float):
    config = options.load_config()
    obj = resolve_object(config, object_mu, object_sigma)
    log.info(f"Classifying object (mu={obj.mu}, sigma={obj.sigma})")

    if config.grid is None:
        registry = config.registry
        subject = obj
    else:
        # A configured grid switches every overlap to quadrature on that grid
        registry = [
            Concept(name=name, state=discretize(state, config.grid))
            for name, state in config.concepts
        ]
        subject = discretize(obj, config.grid)

    result = classify(registry, subject)

    if options.output_format == "json":
        emit_json(
            options,
            {
                "command": "classify",
                "config": config_document(config, obj),
                "result": result_document(result),
            },
        )
    else:
        text = render_table(result_frame(result))
        text += f"object: mu={format_float(obj.mu)} sigma={format_float(obj.sigma)}\n"
        text += f"winner: {result.winner}\n"
        emit(options, text)
