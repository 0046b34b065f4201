"""
Side-by-side report of Born-rule scores for an object state and
triangular membership degrees at a crisp feature value.
"""

import logging
import math
from pathlib import Path

import click
import pandas as pd

from quantum_concepts_py.born_classifier import ClassificationResult, classify
from quantum_concepts_py.cli.classify import result_document
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
from quantum_concepts_py.fuzzy_baseline import fuzzy_classify, fuzzy_union
from quantum_concepts_py.logs import get_logger
from quantum_concepts_py.utils import format_float, round_float

log = get_logger(Path(__file__).stem, level=logging.INFO)


def comparison_frame(quantum: ClassificationResult, fuzzy: ClassificationResult) -> pd.DataFrame:
    names = sorted({e.name for e in quantum.entries} | {e.name for e in fuzzy.entries})

    def column(result: ClassificationResult, field: str) -> list[float]:
        values = {e.name: getattr(e, field) for e in result.entries}
        return [values.get(name, math.nan) for name in names]

    return pd.DataFrame(
        {
            "concept": names,
            "quantum_raw": column(quantum, "raw_score"),
            "quantum_p": column(quantum, "probability"),
            "fuzzy_raw": column(fuzzy, "raw_score"),
            "fuzzy_p": column(fuzzy, "probability"),
        }
    )


def memberships_vanish(quantum: ClassificationResult, fuzzy: ClassificationResult) -> bool:
    """Every membership degree is 0 while some Born-rule score is positive."""
    return all(e.raw_score == 0 for e in fuzzy.entries) and any(
        e.raw_score > 0 for e in quantum.entries
    )


@click.command(
    "compare-fuzzy",
    help="Compare Born-rule classification with triangular fuzzy memberships.",
)
@click.option(
    "--x",
    "x",
    type=float,
    default=None,
    help=(
        "Crisp feature value for the memberships. The object state is centred here too "
        "unless --object-mu is given. Defaults to the object centre."
    ),
)
@object_options
@click.pass_obj
@handle_errors
def compare_fuzzy(options: CliOptions, x: float, object_mu: float, object_sigma: float):
    config = options.load_config()
    if not config.memberships:
        raise ValidationFailure("the configuration defines no memberships to compare against")
    if x is not None and object_mu is None:
        object_mu = x
    obj = resolve_object(config, object_mu, object_sigma)
    x = obj.mu if x is None else x

    quantum = classify(config.registry, obj)
    fuzzy = fuzzy_classify(list(config.memberships), x)
    agree = str(quantum.winner) == str(fuzzy.winner)
    union = fuzzy_union(e.raw_score for e in fuzzy.entries)
    vanish = memberships_vanish(quantum, fuzzy)
    if vanish:
        log.warning(f"Every membership degree is 0 at x={x}")

    if options.output_format == "json":
        emit_json(
            options,
            {
                "command": "compare-fuzzy",
                "config": config_document(config, obj),
                "x": x,
                "quantum": result_document(quantum),
                "fuzzy": result_document(fuzzy),
                "fuzzy_union": round_float(union),
                "decisions_agree": agree,
                "memberships_vanish": vanish,
            },
        )
        return

    text = render_table(comparison_frame(quantum, fuzzy))
    text += f"object: mu={format_float(obj.mu)} sigma={format_float(obj.sigma)}\n"
    text += f"x: {format_float(x)}\n"
    text += f"quantum decision: {quantum.winner}\n"
    text += f"fuzzy decision: {fuzzy.winner}\n"
    text += f"fuzzy union (max): {format_float(union)}\n"
    text += f"decisions agree: {'yes' if agree else 'no'}\n"
    if vanish:
        text += (
            "note: every membership degree is 0 at this x, so the fuzzy decision is a tie over "
            "all concepts while the Born-rule scores stay positive\n"
        )
    emit(options, text)
