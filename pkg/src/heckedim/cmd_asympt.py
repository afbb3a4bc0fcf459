"""Evaluate the large-w expansion of delta(w)."""

from typing import Tuple

import click

from .asymptotics import delta_expansion, expansion_terms, p_polynomials
from .classes import AsymptoticReport
from .helper import check_w, emit, format_option, numeric_failures

__all__ = [
    "main",
]


@click.command(name="asympt")
@click.option(
    "--w",
    "ws",
    type=float,
    multiple=True,
    required=True,
    callback=check_w,
    help="Hecke parameter, at least 10. Repeat for several values.",
)
@format_option
def main(ws: Tuple[float, ...], output_format: str):
    """delta(w) ~ 1/2 + 1/w + sum_j P_j(log w) / w^(j + 1)."""
    with numeric_failures():
        polynomials = [poly.coef.tolist() for poly in p_polynomials()]
        reports = []
        for w in ws:
            terms = expansion_terms(w)
            reports.append(
                AsymptoticReport(
                    w=w, expansion=delta_expansion(w), terms=terms, polynomials=polynomials
                )
            )
    footer = "\n".join(
        f"P_{j}(t) coefficients: {' '.join(f'{c:.12g}' for c in coefficients)}"
        for j, coefficients in enumerate(polynomials, start=1)
    )
    emit(reports, ["w", "expansion", "terms"], output_format, footer=footer)


if __name__ == "__main__":
    main()
