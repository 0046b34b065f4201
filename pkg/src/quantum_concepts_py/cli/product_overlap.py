"""Born-rule score of a concept and an object over several separable feature axes."""

import logging
from pathlib import Path

import click
import pandas as pd

from quantum_concepts_py.cli.common import (
    CliOptions,
    ValidationFailure,
    emit,
    emit_json,
    handle_errors,
    render_table,
)
from quantum_concepts_py.composition_kernel import (
    ProductState,
    product_overlap,
    product_overlap_quadrature,
)
from quantum_concepts_py.hilbert_states import GaussianState, default_grid, inner_product_gaussian
from quantum_concepts_py.logs import get_logger
from quantum_concepts_py.utils import format_float, round_float

log = get_logger(Path(__file__).stem, level=logging.INFO)

# The joint tensor grid has n_points ** n_axes samples
MAX_QUADRATURE_AXES = 2


def axis_frame(concept: ProductState, obj: ProductState) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "axis": list(range(concept.n_axes)),
            "concept_mu": [f.mu for f in concept.factors],
            "concept_sigma": [f.sigma for f in concept.factors],
            "object_mu": [f.mu for f in obj.factors],
            "object_sigma": [f.sigma for f in obj.factors],
            "overlap_sq": [
                inner_product_gaussian(a, b) ** 2 for a, b in zip(concept.factors, obj.factors)
            ],
        }
    )


@click.command(
    "product-overlap",
    help="Score an object against a concept whose state is a product over several feature axes.",
)
@click.option(
    "--concept-axis",
    "concept_axes",
    type=(float, float),
    multiple=True,
    required=True,
    metavar="MU SIGMA",
    help="Concept state on one feature axis; repeat once per axis",
)
@click.option(
    "--object-axis",
    "object_axes",
    type=(float, float),
    multiple=True,
    required=True,
    metavar="MU SIGMA",
    help="Object state on one feature axis; repeat once per axis, in the same order",
)
@click.option(
    "--quadrature-points",
    type=int,
    default=0,
    show_default=True,
    help="Also integrate on a tensor grid with this many (odd) points per axis; 0 skips. "
    f"At most {MAX_QUADRATURE_AXES} axes.",
)
@click.pass_obj
@handle_errors
def product_overlap_report(
    options: CliOptions,
    concept_axes: tuple[tuple[float, float], ...],
    object_axes: tuple[tuple[float, float], ...],
    quadrature_points: int,
):
    if len(concept_axes) != len(object_axes):
        raise ValidationFailure(
            f"got {len(concept_axes)} concept axes and {len(object_axes)} object axes"
        )
    concept = ProductState(tuple(GaussianState(mu=m, sigma=s) for m, s in concept_axes))
    obj = ProductState(tuple(GaussianState(mu=m, sigma=s) for m, s in object_axes))
    score = product_overlap(concept, obj)
    log.info(f"Product overlap over {concept.n_axes} axes: {score!r}")

    quadrature = None
    if quadrature_points:
        if concept.n_axes > MAX_QUADRATURE_AXES:
            raise ValidationFailure(
                f"tensor-grid quadrature supports at most {MAX_QUADRATURE_AXES} axes, "
                f"got {concept.n_axes}"
            )
        grids = [
            default_grid(a, b, n_points=quadrature_points)
            for a, b in zip(concept.factors, obj.factors)
        ]
        quadrature = product_overlap_quadrature(concept, obj, grids)
        log.debug(f"Tensor-grid quadrature {quadrature!r} against closed form {score!r}")

    if options.output_format == "json":
        emit_json(
            options,
            {
                "command": "product-overlap",
                "axes": [
                    {key: round_float(value) for key, value in row.items() if key != "axis"}
                    for row in axis_frame(concept, obj).to_dict(orient="records")
                ],
                "product_overlap": round_float(score),
                "quadrature": None if quadrature is None else round_float(quadrature),
            },
        )
        return

    text = render_table(axis_frame(concept, obj))
    text += f"product overlap: {format_float(score)}\n"
    if quadrature is not None:
        text += f"tensor-grid quadrature: {format_float(quadrature)}\n"
        text += f"abs difference: {abs(quadrature - score):.3e}\n"
    if score == 0.0:
        text += "note: some axis has no overlap, so the joint score is 0\n"
    emit(options, text)
