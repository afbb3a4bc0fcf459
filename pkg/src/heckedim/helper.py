"""
Helper functions shared by the heckedim commands
"""

import csv
import io
import logging
from contextlib import contextmanager
from typing import Any, Iterator, List, Optional, Sequence, Tuple, Union

import click
from pydantic import BaseModel, TypeAdapter, ValidationError

from .classes import ComplexValue
from .errors import DomainError, HeckeDimError

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv", "text")
SIGNIFICANT_DIGITS = 12

format_option = click.option(
    "--format",
    "output_format",
    type=click.Choice(FORMATS),
    default="text",
    show_default=True,
    help="Output format. JSON is the pydantic dump of the reports.",
)


def check_w(
    ctx: click.Context, param: click.Parameter, value: Union[float, Tuple[float, ...], None]
) -> Union[float, Tuple[float, ...], None]:
    """Click callback rejecting w <= 2."""
    values = value if isinstance(value, tuple) else (value,)
    for w in values:
        if w is not None and w <= 2:
            raise click.BadParameter("w must exceed 2", ctx=ctx, param=param)
    return value


def check_s(ctx: click.Context, param: click.Parameter, value: float) -> float:
    if value <= 0.5:
        raise click.BadParameter("s must exceed 1/2", ctx=ctx, param=param)
    return value


@contextmanager
def numeric_failures() -> Iterator[None]:
    """Turn domain errors into usage errors (exit 2) and numeric failures into exit 1.

    A report model rejecting a computed value counts as a numeric failure.
    """
    try:
        yield
    except DomainError as error:
        raise click.UsageError(str(error)) from error
    except (HeckeDimError, ValidationError) as error:
        logger.debug("command failed", exc_info=True)
        raise click.ClickException(str(error)) from error


def format_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, float):
        return f"{value:.{SIGNIFICANT_DIGITS}g}"
    if isinstance(value, complex):
        return f"{format_value(value.real)}{value.imag:+.{SIGNIFICANT_DIGITS}g}j"
    if isinstance(value, (list, tuple)):
        return " ".join(format_value(item) for item in value)
    if isinstance(value, ComplexValue):
        return format_value(complex(value))
    return str(value)


def _row(report: BaseModel, columns: Sequence[str]) -> List[str]:
    return [format_value(getattr(report, column)) for column in columns]


def render(reports: Sequence[BaseModel], columns: Sequence[str], output_format: str) -> str:
    """Render reports of one model type as a JSON array, CSV or an aligned text table."""
    if output_format == "json":
        model = type(reports[0]) if reports else BaseModel
        adapter: TypeAdapter = TypeAdapter(List[model])  # type: ignore[valid-type]
        return adapter.dump_json(list(reports), indent=2).decode()

    rows = [list(columns)] + [_row(report, columns) for report in reports]
    if output_format == "csv":
        buffer = io.StringIO()
        csv.writer(buffer, lineterminator="\n").writerows(rows)
        return buffer.getvalue().rstrip("\n")

    widths = [max(len(row[i]) for row in rows) for i in range(len(columns))]
    return "\n".join(
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in rows
    )


def emit(
    reports: Sequence[BaseModel],
    columns: Sequence[str],
    output_format: str,
    footer: Optional[str] = None,
) -> None:
    """Write the rendered reports to stdout; a text-only footer follows the table."""
    click.echo(render(reports, columns, output_format))
    if footer and output_format == "text":
        click.echo(footer)
