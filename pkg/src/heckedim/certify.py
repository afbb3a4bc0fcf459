"""Certified interval bounds for delta(w), w >= 3.

Keeping the two leading Taylor coefficients of the eigenfunction and eliminating the second
one leaves a scalar fixed-point equation F(delta, w) = 0. The coefficients dropped on the
way are bounded by 3 zeta(3)/sqrt(pi) (i + 1) (3/(2w))^(i + 1), and the leading coefficient
is at least 0.31 times the norm of the eigenfunction. Together these bound |F(delta(w), w)|
by E(w), so delta(w) lies between the solutions of F = -E and F = +E.

Bounds are evaluated in double precision.
"""

import logging
import math
from typing import Optional

from scipy.optimize import bisect

from .classes import IntervalBound
from .dimension import estimate_dimension
from .errors import CertificationError, DomainError, PriorError
from .reference import certified_reference
from .specfun import complex_binomial, riemann_zeta

__all__ = [
    "f_value",
    "error_bound",
    "e1_term",
    "e2_term",
    "e2_direct",
    "coefficient_bound",
    "elementary_series",
    "elementary_series_partial",
    "binomial_weighted_series",
    "binomial_weighted_series_partial",
    "certify_interval",
]

logger = logging.getLogger(__name__)

MIN_W = 3.0
LEADING_COEFFICIENT_FLOOR = 0.31
E2_CONSTANT = 7042.0
E2_DIRECT_CONSTANT = 3521.0
BINOMIAL_SERIES_CONSTANT = 113.0
BISECTION_TOLERANCE = 1e-10
SEARCH_INTERVAL = (0.5 + 1e-6, 1.1)
PRIOR_FLOOR = 0.51
PRIOR_MARGIN = 0.05
MAX_PRIOR_ROUNDS = 10

_SQRT_PI = math.sqrt(math.pi)


def _zeta(s: float) -> float:
    return riemann_zeta(s).real


def _binom2(x: float) -> float:
    return complex_binomial(x, 2).real


def _check(w: float, delta: float) -> None:
    if w < MIN_W:
        raise DomainError(f"certification needs w >= {MIN_W}, got {w}")
    if delta <= 0.5:
        raise DomainError(f"need delta > 1/2, got {delta}")


def _second_coefficient_denominator(delta: float, w: float) -> float:
    return 1.0 - 2.0 * _binom2(2 * delta + 3) * _zeta(4 + 2 * delta) / w ** (4 + 2 * delta)


def f_value(delta: float, w: float) -> float:
    """Evaluate the two-coefficient fixed-point function F(delta, w).

    Raises:
        DomainError: outside w >= 3, delta > 1/2, or if the elimination denominator is not
            positive.
    """
    _check(w, delta)
    denominator = _second_coefficient_denominator(delta, w)
    if denominator <= 0:
        raise DomainError(f"elimination denominator {denominator} is not positive at w={w}")
    coupling = (
        4.0
        * _binom2(2 * delta + 1)
        * _zeta(2 + 2 * delta) ** 2
        / w ** (4 + 4 * delta)
    )
    return 1.0 - 2.0 * _zeta(2 * delta) / w ** (2 * delta) - coupling / denominator


def coefficient_bound(i: int, w: float) -> float:
    """Bound on |c_i| / ||f||: 3 zeta(3)/sqrt(pi) (i + 1) (3/(2w))^(i + 1)."""
    if i < 0:
        raise DomainError(f"coefficient index must be non-negative, got {i}")
    if w < MIN_W:
        raise DomainError(f"certification needs w >= {MIN_W}, got {w}")
    return 3.0 * _zeta(3) / _SQRT_PI * (i + 1) * (3.0 / (2.0 * w)) ** (i + 1)


def elementary_series(x: float) -> float:
    """sum_{l >= 2} (2l + 1) x^(2l) = x^4 (5 - 3x^2) / (1 - x^2)^2 for |x| < 1."""
    if not abs(x) < 1:
        raise DomainError(f"series needs |x| < 1, got {x}")
    y = x * x
    return y * y * (5.0 - 3.0 * y) / (1.0 - y) ** 2


def elementary_series_partial(x: float, terms: int) -> float:
    return math.fsum((2 * l + 1) * x ** (2 * l) for l in range(2, terms + 2))


def binomial_weighted_series(x: float) -> float:
    """sum_{l >= 2} (2l + 1) binom(2l + 3, 2) x^(2l) in closed form."""
    if not abs(x) < 1:
        raise DomainError(f"series needs |x| < 1, got {x}")
    y = x * x
    return 3.0 * y * y * (35.0 - 56.0 * y + 39.0 * y * y - 10.0 * y**3) / (1.0 - y) ** 4


def binomial_weighted_series_partial(x: float, terms: int) -> float:
    return math.fsum(
        (2 * l + 1) * math.comb(2 * l + 3, 2) * x ** (2 * l) for l in range(2, terms + 2)
    )


def e1_term(w: float, delta: float) -> float:
    """Contribution of the coefficients c_i, i >= 4, to the first equation."""
    _check(w, delta)
    x = 3.0 / (2.0 * w * w)
    return (
        729.0
        * _zeta(3)
        * _zeta(4 + 2 * delta)
        * (5.0 - 3.0 * x * x)
        / (16.0 * w ** (9 + 2 * delta) * _SQRT_PI * (1.0 - x * x) ** 2)
    )


def e2_term(w: float, delta: float) -> float:
    """Contribution of the coefficients dropped from the second equation, after elimination."""
    _check(w, delta)
    denominator = _second_coefficient_denominator(delta, w)
    if denominator <= 0:
        raise DomainError(f"elimination denominator {denominator} is not positive at w={w}")
    return E2_CONSTANT * _zeta(2 + 2 * delta) / (w ** (13 + 4 * delta) * denominator)


def e2_direct(w: float, delta: float) -> float:
    """The raw second-equation error 9 zeta(3) zeta(7) / (w^(3 + 2 delta) sqrt(pi)) 113 x^4.

    Stays below 3521 / w^(11 + 2 delta), the constant carried into :func:`e2_term`.
    """
    _check(w, delta)
    x = 3.0 / (2.0 * w * w)
    return (
        9.0
        * _zeta(3)
        * _zeta(7)
        / (w ** (3 + 2 * delta) * _SQRT_PI)
        * BINOMIAL_SERIES_CONSTANT
        * x**4
    )


def error_bound(w: float, delta_prior: float) -> float:
    """E(w) = (E1 + E2) / 0.31 evaluated at the a-priori lower bound for delta(w).

    The bound decreases in delta, so any prior below delta(w) gives a valid E(w).

    Raises:
        DomainError: unless w >= 3 and 1/2 < delta_prior < 1.
    """
    if not 0.5 < delta_prior < 1.0:
        raise DomainError(f"delta_prior must lie in (1/2, 1), got {delta_prior}")
    _check(w, delta_prior)
    return (e1_term(w, delta_prior) + e2_term(w, delta_prior)) / LEADING_COEFFICIENT_FLOOR


def _solve(w: float, target: float) -> float:
    lo, hi = SEARCH_INTERVAL
    return bisect(lambda delta: f_value(delta, w) - target, lo, hi, xtol=BISECTION_TOLERANCE)


def certify_interval(
    w: float, delta_prior: Optional[float] = None, k: Optional[int] = None
) -> IntervalBound:
    """Certify lower < delta(w) < upper.

    Args:
        w: the Hecke parameter, at least 3.
        delta_prior: a-priori lower bound for delta(w). Defaults to
            max(0.51, delta_ladder - 0.05).
        k: matrix size for the ladder estimate reported alongside the interval.

    Raises:
        PriorError: if the certified lower end falls below the prior.
        CertificationError: if the ladder estimate lies outside the certified interval.
    """
    if w < MIN_W:
        raise DomainError(f"certification needs w >= {MIN_W}, got {w}")
    estimate = estimate_dimension(w, k).delta
    prior = max(PRIOR_FLOOR, estimate - PRIOR_MARGIN) if delta_prior is None else delta_prior

    for round_ in range(1, MAX_PRIOR_ROUNDS + 1):
        epsilon = error_bound(w, prior)
        lower = _solve(w, -epsilon)
        upper = _solve(w, epsilon)
        logger.info(
            "w=%r round %d: prior %.10f, E=%.6g, interval (%.10f, %.10f)",
            w,
            round_,
            prior,
            epsilon,
            lower,
            upper,
        )
        if lower < prior:
            raise PriorError(
                f"certified lower bound {lower} for w={w} is below the prior {prior}"
            )
        if lower - prior <= BISECTION_TOLERANCE or round_ == MAX_PRIOR_ROUNDS:
            break
        prior = lower

    if not lower < estimate < upper:
        raise CertificationError(
            f"ladder estimate {estimate} for w={w} lies outside the certified interval "
            f"({lower}, {upper})"
        )
    return IntervalBound(
        w=w,
        lower=lower,
        upper=upper,
        epsilon_used=epsilon,
        delta_prior=prior,
        delta_estimate=estimate,
        reference=certified_reference(w),
    )
