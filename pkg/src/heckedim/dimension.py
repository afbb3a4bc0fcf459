"""Zeros of the transfer determinants and the delta(w) ladder.

At theta = 0 the matrix A_k splits into its even and odd index blocks and the zero s_k(w)
comes from the even block, so s_k = s_{k+1} for odd k. Ladder diagnostics therefore skip
differences below ``NOISE_FLOOR``.
"""

import logging
import math
from typing import Callable, List, Optional, Tuple

import numpy as np
from scipy.optimize import brentq

from .classes import (
    CoverZeroReport,
    DimensionResult,
    FactorZeros,
    LadderReport,
    ReferenceRow,
    TableRow,
)
from .errors import ConvergenceError, DomainError, LadderError
from .reference import reference_rows
from .transfer import build_matrix, determinant

__all__ = [
    "default_k",
    "default_interval",
    "base_eigenvalue",
    "locate_zero",
    "find_zero",
    "dimension_ladder",
    "ladder_error_estimate",
    "estimate_dimension",
    "cover_zero_scan",
    "matches_printed",
    "reproduce_table",
]

logger = logging.getLogger(__name__)

UPPER_END = 1.1
GRID_STEP = 1e-2
ROOT_TOLERANCE = 1e-13
BRENT_XTOL = 1e-15
BRENT_RTOL = 4 * np.finfo(float).eps
RESIDUAL_TOLERANCE = 1e-12
NOISE_FLOOR = 1e-12
COVER_MARGIN = 1e-3
REFERENCE_SLACK = 1e-3
TABLE_K = 15
PRINTED_SLACK = 1e-6
_MAX_ITERATIONS = 200


def default_k(w: float) -> int:
    """max(15, ceil(30 / log2(w / 2))), so that (w/2)^-k stays near 2^-30."""
    if w <= 2:
        raise DomainError(f"w must exceed 2, got {w}")
    return max(15, math.ceil(30 / math.log2(w / 2)))


def default_interval(w: float) -> Tuple[float, float]:
    """Scan interval for the untwisted zero; the zero approaches 1/2 + 1/w for large w."""
    return 0.5 + min(1e-2, 0.1 / w), UPPER_END


def base_eigenvalue(delta: float) -> float:
    """Bottom of the Laplace spectrum, delta (1 - delta)."""
    return delta * (1.0 - delta)


def _determinant_function(k: int, w: float, theta: float, sign: int) -> Callable[[float], float]:
    def evaluate(s: float) -> float:
        return determinant(build_matrix(k, s, w, theta), sign).real

    return evaluate


def _bracket_around(
    f: Callable[[float], float], root: float, f_root: float, cell: float
) -> Tuple[float, float]:
    """Smallest symmetric sign-change bracket around root, starting at width ROOT_TOLERANCE."""
    half = ROOT_TOLERANCE / 2
    while half < cell:
        left, right = root - half, root + half
        if f_root == 0.0 or f(left) * f(right) <= 0.0:
            return left, right
        half *= 2
    return root - cell, root + cell


def _refine(
    f: Callable[[float], float], a: float, b: float
) -> Tuple[float, Tuple[float, float], int, float]:
    """Brent's method on one grid cell; returns root, bracket, iterations and |f(root)|."""
    root, info = brentq(
        f,
        a,
        b,
        xtol=BRENT_XTOL,
        rtol=BRENT_RTOL,
        maxiter=_MAX_ITERATIONS,
        full_output=True,
        disp=False,
    )
    if not info.converged:
        raise ConvergenceError(f"brentq stopped on [{a}, {b}]: {info.flag}")
    f_root = f(root)
    return root, _bracket_around(f, root, f_root, b - a), info.iterations, abs(f_root)


def locate_zero(
    k: int,
    w: float,
    theta: float = 0.0,
    sign: int = 1,
    interval: Optional[Tuple[float, float]] = None,
) -> Optional[DimensionResult]:
    """Locate the largest real zero of det(1 - sign A_k(s, w, theta)) in the interval.

    The determinant is sampled on a grid of step 1e-2, refined once to 1e-3 when no sign
    change shows up. Each sign change is refined with Brent's method and reported with a
    sign-change bracket of width 1e-13 around the root.

    Returns:
        The zero with its bracket and residual, or None when no sign change is found.

    Raises:
        ConvergenceError: if |D_k| at the zero exceeds ``RESIDUAL_TOLERANCE``.
    """
    lo, hi = interval or default_interval(w)
    if lo <= 0.5:
        raise DomainError(f"scan interval must start above 1/2, got {lo}")
    f = _determinant_function(k, w, theta, sign)

    for step in (GRID_STEP, GRID_STEP / 10):
        grid = np.linspace(lo, hi, math.ceil((hi - lo) / step) + 1)
        values = np.array([f(s) for s in grid])
        signs = np.where(values >= 0.0, 1, -1)
        cells = np.flatnonzero(signs[:-1] != signs[1:])
        if len(cells):
            break
        logger.debug(
            "no sign change for k=%d w=%r theta=%r sign=%d at step %g", k, w, theta, sign, step
        )
    else:
        return None

    roots = [_refine(f, grid[cell], grid[cell + 1]) for cell in cells]
    root, bracket, iterations, residual = max(roots, key=lambda found: found[0])
    if len(roots) > 1:
        logger.warning(
            "%d sign changes for k=%d w=%r theta=%r sign=%d; keeping the largest zero",
            len(roots),
            k,
            w,
            theta,
            sign,
        )
    if residual > RESIDUAL_TOLERANCE:
        raise ConvergenceError(
            f"residual {residual:.3g} above {RESIDUAL_TOLERANCE} at s_{k}({w}) = {root!r}"
        )
    return DimensionResult(
        w=w,
        k=k,
        s_k=root,
        bracket=bracket,
        residual=residual,
        iterations=iterations,
        theta=theta,
        sign=sign,
        multiple_roots=len(roots) > 1,
    )


def find_zero(
    k: int,
    w: float,
    theta: float = 0.0,
    sign: int = 1,
    interval: Optional[Tuple[float, float]] = None,
) -> Optional[float]:
    """Return the real zero located by :func:`locate_zero`, or None."""
    result = locate_zero(k, w, theta, sign, interval)
    return None if result is None else result.s_k


def dimension_ladder(w: float, k_min: int, k_max: int) -> List[DimensionResult]:
    """Compute s_k(w) for k = k_min ... k_max.

    Raises:
        LadderError: if a rung has no zero or the differences grow twice in a row.
    """
    if w <= 2:
        raise DomainError(f"w must exceed 2, got {w}")
    if k_min < 2 or k_max < k_min:
        raise DomainError(f"need 2 <= k_min <= k_max, got ({k_min}, {k_max})")

    results: List[DimensionResult] = []
    previous: Optional[float] = None
    increases = 0
    for k in range(k_min, k_max + 1):
        result = locate_zero(k, w)
        if result is None:
            raise LadderError(f"no zero of D_{k}(s, {w}) on {default_interval(w)}")
        logger.info("s_%d(%r) = %.15f", k, w, result.s_k)
        if results:
            difference = abs(result.s_k - results[-1].s_k)
            if difference > NOISE_FLOOR:
                increases = increases + 1 if previous is not None and difference > previous else 0
                if increases >= 2:
                    raise LadderError(f"s_k({w}) differences grew twice in a row at k={k}")
                previous = difference
        results.append(result)
    return results


def ladder_error_estimate(results: List[DimensionResult], w: float) -> Optional[float]:
    """Geometric-tail estimate |delta - s_kmax| from the last non-vanishing difference."""
    differences = [abs(b.s_k - a.s_k) for a, b in zip(results, results[1:])]
    if not differences:
        return None
    ratio = w / 2.0
    return max(differences[-2:]) * ratio / (ratio - 1.0)


def estimate_dimension(w: float, k: Optional[int] = None, rungs: int = 5) -> LadderReport:
    """Run the top ``rungs`` rungs of the ladder ending at k (default :func:`default_k`)."""
    k = k or default_k(w)
    results = dimension_ladder(w, max(2, k - rungs + 1), k)
    delta = results[-1].s_k
    return LadderReport(
        w=w,
        k=k,
        delta=delta,
        error_estimate=ladder_error_estimate(results, w),
        base_eigenvalue=base_eigenvalue(delta),
        rungs=results,
    )


def cover_zero_scan(
    w: float, n: int, epsilon: float, k: Optional[int] = None
) -> CoverZeroReport:
    """Scan the 2n factors det(1 -+ A_k^(a/n)) of the n-fold cover for real zeros.

    Counts the zeros that fall in (delta - epsilon, delta], with delta the untwisted zero.
    """
    if w <= 2:
        raise DomainError(f"w must exceed 2, got {w}")
    if n < 1:
        raise DomainError(f"cover degree must be positive, got {n}")
    k = k or default_k(w)
    untwisted = locate_zero(k, w)
    if untwisted is None:
        raise LadderError(f"no zero of D_{k}(s, {w})")
    delta = untwisted.s_k

    interval = (0.5 + COVER_MARGIN, UPPER_END)
    factors = []
    for a in range(n):
        for sign in (1, -1):
            zero = find_zero(k, w, a / n, sign, interval)
            factors.append(
                FactorZeros(a=a, sign=sign, theta=a / n, zeros=[] if zero is None else [zero])
            )
            logger.info("cover n=%d factor a=%d sign=%+d: %s", n, a, sign, zero)

    # the a = 0 factor reproduces delta itself up to the root tolerance
    top = delta + 100 * ROOT_TOLERANCE
    count = sum(
        1 for factor in factors for zero in factor.zeros if delta - epsilon < zero <= top
    )
    return CoverZeroReport(
        w=w, n=n, epsilon=epsilon, k=k, delta=delta, factors=factors, count=count
    )


def matches_printed(s_k: float, reference: ReferenceRow) -> bool:
    """True when s_k rounded like the printed value is at most one last-digit unit away."""
    rounded = round(s_k, reference.decimals)
    return abs(rounded - reference.value) <= reference.last_digit * (1 + PRINTED_SLACK)


def reproduce_table(k: int = TABLE_K) -> List[TableRow]:
    """Recompute s_k(w) for every row of the published table and compare.

    A row matches the printed value when s_k rounded to the printed number of decimals is
    within one unit of the last printed digit. It lies within the reference interval when
    |s_k - center| <= width + 1e-3.
    """
    rows = []
    for reference in reference_rows():
        result = locate_zero(k, reference.w)
        if result is None:
            raise LadderError(f"no zero of D_{k}(s, {reference.w})")
        rows.append(
            TableRow(
                w=reference.w,
                k=k,
                s_k=result.s_k,
                printed=reference.printed,
                reference_center=reference.center,
                reference_width=reference.width,
                matches_printed=matches_printed(result.s_k, reference),
                within_reference=abs(result.s_k - reference.center)
                <= reference.width + REFERENCE_SLACK,
            )
        )
    return rows
