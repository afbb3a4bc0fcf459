"""Cross-check the determinant against the geodesic side."""

import click

from .geodesic_oracle import WORD_BUDGET, cross_validate
from .helper import check_s, check_w, emit, format_option, numeric_failures

__all__ = [
    "main",
]

COLUMNS = [
    "w",
    "s",
    "theta",
    "determinant",
    "log_det",
    "euler_product",
    "det_vs_log_det",
    "det_vs_euler",
    "log_det_vs_euler",
]


@click.command(name="validate")
@click.option("--w", type=float, required=True, callback=check_w, help="Hecke parameter w > 2.")
@click.option("--s", type=float, required=True, callback=check_s, help="Real s > 1/2.")
@click.option("--theta", type=float, default=0.0, show_default=True, help="Twist of T_w.")
@click.option("--k", type=int, default=30, show_default=True, help="Matrix size.")
@click.option("--nmax", type=int, default=8, show_default=True, help="Highest trace order.")
@click.option(
    "--m",
    type=int,
    default=200,
    show_default=True,
    help=f"Letter cutoff for the traces, capped so no order exceeds {WORD_BUDGET} words.",
)
@click.option(
    "--euler-nmax", type=int, default=3, show_default=True, help="Longest class word."
)
@click.option("--euler-m", type=int, default=50, show_default=True, help="Class letter cutoff.")
@format_option
def main(
    w: float,
    s: float,
    theta: float,
    k: int,
    nmax: int,
    m: int,
    euler_nmax: int,
    euler_m: int,
    output_format: str,
):
    """Evaluate det(1 - L) by matrix, trace expansion and Euler product."""
    with numeric_failures():
        report = cross_validate(w, s, theta, k, nmax, m, euler_nmax, euler_m)
    emit([report], COLUMNS, output_format)


if __name__ == "__main__":
    main()
