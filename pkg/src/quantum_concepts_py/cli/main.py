import click

from quantum_concepts_py.cli import (
    classify,
    compare_fuzzy,
    emit_figure,
    interference,
    kernel_matrix,
    metric_check,
    product_overlap,
)
from quantum_concepts_py.cli.common import CliOptions
from quantum_concepts_py.logs import set_log_level


@click.group(
    name="quantum-concepts",
    help="Represent concepts as wavefunctions, classify by the Born rule and compare with "
    "a fuzzy-metric baseline.",
)
@click.option(
    "--config",
    "config_path",
    type=str,
    default=None,
    help="Concept configuration document (YAML or JSON, local path or fsspec URL). "
    "Defaults to the bundled car/boat/object configuration.",
)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["table", "json"]),
    default="table",
    show_default=True,
    help="Report format",
)
@click.option("--seed", type=int, default=42, show_default=True, help="Random seed")
@click.option(
    "--output",
    type=str,
    default=None,
    help="Write the report or CSV to this path instead of stdout",
)
@click.option(
    "--log",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], case_sensitive=False),
    default="WARNING",
    show_default=True,
    help="control the log level, e.g., --log=error",
)
@click.pass_context
def cli(ctx: click.Context, config_path, output_format, seed, output, log):
    set_log_level(log)
    ctx.obj = CliOptions(
        config_path=config_path, output_format=output_format, seed=seed, output=output
    )


cli.add_command(classify.classify_object)
cli.add_command(emit_figure.emit_figure)
cli.add_command(metric_check.metric_check)
cli.add_command(compare_fuzzy.compare_fuzzy)
cli.add_command(interference.interference)
cli.add_command(kernel_matrix.export_kernel_matrix)
cli.add_command(product_overlap.product_overlap_report)
