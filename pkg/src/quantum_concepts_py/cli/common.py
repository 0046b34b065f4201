"""Options, error mapping and output helpers shared by the CLI commands."""

import functools
import json
import logging
import math
from dataclasses import dataclass
from pathlib import Path

import click
import pandas as pd

from quantum_concepts_py.config import ConceptConfig, load_config
from quantum_concepts_py.exceptions import ConfigError, InvalidState, QuantumConceptsError
from quantum_concepts_py.hilbert_states import GaussianState
from quantum_concepts_py.io import write_text
from quantum_concepts_py.logs import get_logger
from quantum_concepts_py.utils import format_float

log = get_logger(Path(__file__).stem, level=logging.INFO)

# Full precision for CSV so quadrature over emitted columns stays meaningful
CSV_FLOAT_FORMAT = "%.15e"


class ValidationFailure(click.ClickException):
    exit_code = 2


class ComputationFailure(click.ClickException):
    exit_code = 1


@dataclass(frozen=True)
class CliOptions:
    config_path: str | None
    output_format: str
    seed: int
    output: str | None

    def load_config(self) -> ConceptConfig:
        return load_config(self.config_path)


def handle_errors(func):
    """Map library errors onto exit codes: 2 for invalid input, 1 for computation errors."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (ConfigError, InvalidState) as e:
            log.error(e)
            raise ValidationFailure(str(e)) from e
        except (QuantumConceptsError, ArithmeticError) as e:
            log.error(e)
            raise ComputationFailure(f"{type(e).__name__}: {e}") from e
        except OSError as e:
            log.error(e)
            raise ComputationFailure(f"cannot write output: {e}") from e

    return wrapper


def object_options(func):
    """--object-mu / --object-sigma, overriding the configured object."""
    func = click.option(
        "--object-sigma",
        type=float,
        default=None,
        help="Width of the object state. Defaults to the configured object (sigma=2).",
    )(func)
    func = click.option(
        "--object-mu",
        type=float,
        default=None,
        help="Centre of the object state. Defaults to the configured object (mu=3).",
    )(func)
    return func


def resolve_object(
    config: ConceptConfig, object_mu: float | None, object_sigma: float | None
) -> GaussianState:
    return GaussianState(
        mu=config.obj.mu if object_mu is None else object_mu,
        sigma=config.obj.sigma if object_sigma is None else object_sigma,
    )


def config_document(config: ConceptConfig, obj: GaussianState) -> dict:
    """The configuration actually used, in schema form, with the resolved object."""
    doc = config.to_dict()
    doc["object"] = {"mu": obj.mu, "sigma": obj.sigma}
    return doc


def emit(options: CliOptions, text: str, output: str | None = None) -> None:
    """Write to the output path when one is given, otherwise to stdout."""
    output = output or options.output
    if output:
        write_text(output, text)
    else:
        click.echo(text, nl=False)


def emit_json(options: CliOptions, doc: dict, output: str | None = None) -> None:
    emit(options, json.dumps(doc, indent=2) + "\n", output)


def render_table(frame: pd.DataFrame) -> str:
    """Fixed-column text table, floats at 6 decimals and missing values as '-'."""

    def fmt(value):
        if isinstance(value, float):
            return "-" if math.isnan(value) else format_float(value)
        return str(value)

    formatters = {column: fmt for column in frame.columns}
    return frame.to_string(index=False, formatters=formatters, justify="right") + "\n"


def to_csv(frame: pd.DataFrame, **kwargs) -> str:
    return frame.to_csv(float_format=CSV_FLOAT_FORMAT, lineterminator="\n", **kwargs)
