"""Certify interval bounds for delta(w)."""

from typing import Optional, Tuple

import click

from .certify import certify_interval
from .helper import emit, format_option, numeric_failures

__all__ = [
    "main",
]

COLUMNS = [
    "w",
    "lower",
    "upper",
    "width",
    "epsilon_used",
    "delta_prior",
    "delta_estimate",
    "exceeds_three_quarters",
    "reference",
]


def _check_certifiable(
    ctx: click.Context, param: click.Parameter, value: Tuple[float, ...]
) -> Tuple[float, ...]:
    for w in value:
        if w < 3:
            raise click.BadParameter("certification needs w >= 3", ctx=ctx, param=param)
    return value


@click.command(name="certify")
@click.option(
    "--w",
    "ws",
    type=float,
    multiple=True,
    required=True,
    callback=_check_certifiable,
    help="Hecke parameter w >= 3. Repeat for several values.",
)
@click.option(
    "--prior",
    type=click.FloatRange(0.5, 1.0, min_open=True, max_open=True),
    help="A-priori lower bound for delta(w). Defaults to the ladder estimate minus 0.05.",
)
@format_option
def main(ws: Tuple[float, ...], prior: Optional[float], output_format: str):
    """Certify lower < delta(w) < upper from the two-coefficient fixed-point equation."""
    with numeric_failures():
        bounds = [certify_interval(w, prior) for w in ws]
    emit(bounds, COLUMNS, output_format)


if __name__ == "__main__":
    main()
