"""Count zeros of the twisted determinants of an abelian cover."""

from typing import Optional

import click

from .dimension import cover_zero_scan
from .helper import check_w, emit, format_option, numeric_failures

__all__ = [
    "main",
]


@click.command(name="covers")
@click.option("--w", type=float, required=True, callback=check_w, help="Hecke parameter w > 2.")
@click.option("--n", type=click.IntRange(min=1), required=True, help="Degree of the cover.")
@click.option(
    "--eps",
    type=click.FloatRange(min=0.0, min_open=True),
    default=0.05,
    show_default=True,
    help="Window (delta - eps, delta] for the zero count.",
)
@click.option("--k", type=int, help="Matrix size. Defaults as for the dim command.")
@format_option
def main(w: float, n: int, eps: float, k: Optional[int], output_format: str):
    """Scan det(1 -+ A_k^(a/n)) for a < n and count zeros near delta(w)."""
    with numeric_failures():
        report = cover_zero_scan(w, n, eps, k)
    footer = "\n".join(
        f"a={factor.a} sign={factor.sign:+d}: "
        + (" ".join(f"{zero:.12g}" for zero in factor.zeros) or "no zero")
        for factor in report.factors
    )
    emit([report], ["w", "n", "epsilon", "k", "delta", "count"], output_format, footer=footer)


if __name__ == "__main__":
    main()
