"""Compute delta(w) from the transfer determinants."""

from typing import Optional, Tuple

import click

from .dimension import estimate_dimension
from .helper import check_w, emit, format_option, numeric_failures

__all__ = [
    "main",
]


@click.command(name="dim")
@click.option(
    "--w",
    "ws",
    type=float,
    multiple=True,
    required=True,
    callback=check_w,
    help="Hecke parameter w > 2. Repeat for several values.",
)
@click.option(
    "--k",
    type=int,
    help="Matrix size. Defaults to max(15, ceil(30 / log2(w / 2))).",
)
@format_option
def main(ws: Tuple[float, ...], k: Optional[int], output_format: str):
    """Compute delta(w) as the zero s_k(w) of det(1 - A_k(s, w))."""
    with numeric_failures():
        reports = [estimate_dimension(w, k) for w in ws]
    emit(reports, ["w", "k", "delta", "error_estimate", "base_eigenvalue"], output_format)


if __name__ == "__main__":
    main()
