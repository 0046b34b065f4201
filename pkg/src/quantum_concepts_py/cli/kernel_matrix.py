"""Export the Gaussian-overlap kernel matrix of the configured states as CSV."""

import logging
from pathlib import Path

import click

from quantum_concepts_py.cli.common import (
    CliOptions,
    ValidationFailure,
    config_document,
    emit,
    emit_json,
    handle_errors,
    object_options,
    resolve_object,
    to_csv,
)
from quantum_concepts_py.composition_kernel import kernel_matrix
from quantum_concepts_py.logs import get_logger
from quantum_concepts_py.utils import round_float

log = get_logger(Path(__file__).stem, level=logging.INFO)


@click.command(
    "kernel-matrix",
    help="Write the squared-overlap kernel matrix of the concepts and the object as CSV.",
)
@click.option(
    "--include-object/--no-include-object",
    default=True,
    show_default=True,
    help="Add the object state as a final row and column named 'object'",
)
@object_options
@click.pass_obj
@handle_errors
def export_kernel_matrix(
    options: CliOptions, include_object: bool, object_mu: float, object_sigma: float
):
    config = options.load_config()
    obj = resolve_object(config, object_mu, object_sigma)
    states = list(config.concepts)
    if include_object:
        if any(name == "object" for name, _ in states):
            raise ValidationFailure("concept name 'object' is reserved for the object row")
        states.append(("object", obj))

    matrix = kernel_matrix(states)
    min_eigenvalue = matrix.min_eigenvalue
    log.info(f"Kernel matrix minimum eigenvalue {min_eigenvalue!r}")

    if options.output_format == "json":
        emit_json(
            options,
            {
                "command": "kernel-matrix",
                "config": config_document(config, obj),
                "labels": list(matrix.row_labels),
                "entries": [[round_float(v) for v in row] for row in matrix.entries],
                "min_eigenvalue": round_float(min_eigenvalue),
                "psd": matrix.is_psd(),
            },
        )
    else:
        emit(options, to_csv(matrix.to_frame(), index_label="name"))
