"""Recompute the published delta(w) table."""

import click

from .dimension import TABLE_K, reproduce_table
from .helper import emit, format_option, numeric_failures

__all__ = [
    "main",
]

COLUMNS = [
    "w",
    "k",
    "s_k",
    "printed",
    "reference_center",
    "reference_width",
    "matches_printed",
    "within_reference",
]


@click.command(name="table")
@click.option("--k", type=int, default=TABLE_K, show_default=True, help="Matrix size.")
@format_option
def main(k: int, output_format: str):
    """Compare s_k(w) with the published values and reference intervals."""
    with numeric_failures():
        rows = reproduce_table(k)
    passed = sum(row.within_reference for row in rows)
    emit(rows, COLUMNS, output_format, footer=f"{passed}/{len(rows)} rows within reference")


if __name__ == "__main__":
    main()
