"""Special functions used by the transfer matrices and the asymptotic expansion.

The Riemann zeta function and its lattice generalization
``sum_{n >= 0} (step * n + offset) ** -s`` are evaluated by Euler-Maclaurin summation
with Bernoulli corrections through B_10. The number of base terms doubles until the first
omitted correction (the B_12 term) drops below ``ZETA_TOLERANCE`` relative to the result.

Periodic zeta values ``Li_s(exp(2 pi i theta))`` at rational ``theta = a/q`` are assembled
from the ``q`` residue-class lattice sums, which keeps full accuracy down to ``Re(s) -> 1``.
Other twists fall back to direct compensated summation with an integral tail bound.

``zeta_regular_part`` takes the pole out of the Euler-Maclaurin tail, so zeta(1 + x) - 1/x can be
sampled on a full circle around x = 0.

All functions accept a scalar or a numpy array for ``s``; scalars come back as ``complex``.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Tuple, Union

import numpy as np
import numpy.typing as npt

from .errors import ConvergenceError, DomainError

__all__ = [
    "StieltjesTable",
    "riemann_zeta",
    "zeta_regular_part",
    "shifted_zeta",
    "periodic_zeta",
    "periodic_zeta_pair",
    "periodic_zeta_tail",
    "complex_binomial",
    "stieltjes_constants",
    "laurent_coefficient_fit",
    "validate_stieltjes_constants",
]

logger = logging.getLogger(__name__)

ComplexInput = Union[complex, float, npt.ArrayLike]
ComplexOutput = Union[complex, np.ndarray]

ZETA_TOLERANCE = 1e-15
PERIODIC_TOLERANCE = 1e-10
MAX_TWIST_DENOMINATOR = 64
MAX_DIRECT_TERMS = 2**20
LAURENT_FIT_TOLERANCE = 1e-12
_MAX_BASE_TERMS = 2**16
_DIRECT_CHUNK = 2**14

#: B_2, B_4, ..., B_12 divided by (2k)!
_BERNOULLI_OVER_FACTORIAL = tuple(
    b / math.factorial(2 * index + 2)
    for index, b in enumerate((1 / 6, -1 / 30, 1 / 42, -1 / 30, 5 / 66, -691 / 2730))
)

#: gamma_0 ... gamma_4, the Laurent coefficients of zeta at s = 1
STIELTJES = (
    0.5772156649015329,
    -0.07281584548367672,
    -0.009690363192872318,
    0.002053834420303346,
    0.0023253700654673,
)


@dataclass(frozen=True)
class StieltjesTable:
    """The Stieltjes constants gamma_0 ... gamma_4."""

    gamma: Tuple[float, ...]

    def laurent_coefficient(self, n: int) -> float:
        """Coefficient of x^n in zeta(1 + x) - 1/x."""
        return (-1) ** n * self.gamma[n] / math.factorial(n)


def _as_array(s: ComplexInput) -> Tuple[np.ndarray, bool]:
    values = np.asarray(s, dtype=complex)
    return np.atleast_1d(values).ravel(), values.ndim == 0


def _restore(values: np.ndarray, scalar: bool, shape: Tuple[int, ...] = ()) -> ComplexOutput:
    if scalar:
        return complex(values[0])
    return values.reshape(shape) if shape else values


def _require_convergent(s: np.ndarray) -> None:
    if np.any(s.real <= 1.0):
        raise DomainError(f"zeta-type series need Re(s) > 1, got min Re(s) = {s.real.min()}")


def _euler_maclaurin(
    s: np.ndarray, offset: float, step: float, n_terms: int, regular: bool = False
) -> Tuple[np.ndarray, np.ndarray]:
    """Return the Euler-Maclaurin value and the size of the first omitted correction.

    With ``regular`` the pole 1 / (step (s - 1)) is taken out of the tail integral, which
    continues the result through s = 1.
    """
    log_x = np.log(step * np.arange(n_terms) + offset)
    head = np.exp(-np.outer(log_x, s)).sum(axis=0)

    log_end = math.log(step * n_terms + offset)
    if regular:
        u = (1 - s) * log_end
        ratio = np.ones_like(u)
        nonzero = u != 0
        ratio[nonzero] = np.expm1(u[nonzero]) / u[nonzero]
        tail = -log_end * ratio / step
    else:
        tail = np.exp((1 - s) * log_end) / (step * (s - 1))
    value = head + tail + 0.5 * np.exp(-s * log_end)
    rising = s.copy()
    for k, coefficient in enumerate(_BERNOULLI_OVER_FACTORIAL[:-1], start=1):
        order = 2 * k - 1
        value += coefficient * rising * step**order * np.exp(-(s + order) * log_end)
        rising = rising * (s + order) * (s + order + 1)
    omitted = np.abs(
        _BERNOULLI_OVER_FACTORIAL[-1] * rising * step**11 * np.exp(-(s.real + 11) * log_end)
    )
    return value, omitted


def _lattice_zeta(
    s: np.ndarray, offset: float, step: float = 1.0, regular: bool = False
) -> np.ndarray:
    n_terms = 8
    while True:
        value, omitted = _euler_maclaurin(s, offset, step, n_terms, regular)
        if np.all(omitted <= ZETA_TOLERANCE * np.abs(value)):
            return value
        if n_terms >= _MAX_BASE_TERMS:
            raise ConvergenceError(
                f"Euler-Maclaurin did not reach {ZETA_TOLERANCE} with {n_terms} base terms"
            )
        n_terms *= 2


def riemann_zeta(s: ComplexInput) -> ComplexOutput:
    """Evaluate the Riemann zeta function for Re(s) > 1.

    Args:
        s: complex argument, scalar or array.

    Returns:
        zeta(s) with relative error around 1e-14.

    Raises:
        DomainError: if any Re(s) <= 1.
    """
    values, scalar = _as_array(s)
    _require_convergent(values)
    return _restore(_lattice_zeta(values, 1.0), scalar, np.shape(s))


def zeta_regular_part(x: ComplexInput) -> ComplexOutput:
    """Evaluate zeta(1 + x) - 1/x, an entire function of x.

    The pole is removed inside the Euler-Maclaurin tail, so x may be zero, negative or
    complex.
    """
    values, scalar = _as_array(x)
    return _restore(_lattice_zeta(values + 1, 1.0, regular=True), scalar, np.shape(x))


def shifted_zeta(s: ComplexInput, offset: float, step: float = 1.0) -> ComplexOutput:
    """Evaluate sum_{n >= 0} (step * n + offset) ** -s for Re(s) > 1 and offset >= 1."""
    if offset < 1 or step <= 0:
        raise DomainError(f"need offset >= 1 and step > 0, got offset={offset}, step={step}")
    values, scalar = _as_array(s)
    _require_convergent(values)
    return _restore(_lattice_zeta(values, float(offset), float(step)), scalar, np.shape(s))


def _rational_twist(theta: float) -> Optional[Fraction]:
    fraction = Fraction(theta).limit_denominator(MAX_TWIST_DENOMINATOR)
    if abs(float(fraction) - theta) <= 1e-14:
        return fraction
    return None


def _check_twist(theta: float) -> None:
    if not 0.0 <= theta < 1.0:
        raise DomainError(f"twist theta must lie in [0, 1), got {theta}")


def _direct_periodic(s: np.ndarray, theta: float) -> Tuple[np.ndarray, np.ndarray]:
    """Sum e^{+-2 pi i theta n} n^-s over n >= 1 directly, chunk by chunk."""
    sigma = s.real.min()
    plus_chunks: List[np.ndarray] = []
    minus_chunks: List[np.ndarray] = []
    n_low = 1
    while True:
        n = np.arange(n_low, n_low + _DIRECT_CHUNK, dtype=float)
        powers = np.exp(-np.outer(np.log(n), s))
        phase = np.exp(2j * np.pi * theta * n)[:, None]
        plus_chunks.append((phase * powers).sum(axis=0))
        minus_chunks.append((phase.conj() * powers).sum(axis=0))
        n_low += _DIRECT_CHUNK
        plus = _compensated(plus_chunks)
        minus = _compensated(minus_chunks)
        bound = (n_low - 1) ** (1 - sigma) / (sigma - 1)
        scale = np.minimum(np.abs(plus), np.abs(minus))
        if np.all(bound <= PERIODIC_TOLERANCE * scale):
            return plus, minus
        if n_low > MAX_DIRECT_TERMS:
            raise ConvergenceError(
                f"direct periodic zeta sum at theta={theta} needs more than {MAX_DIRECT_TERMS} "
                "terms; use a rational twist with denominator <= "
                f"{MAX_TWIST_DENOMINATOR}"
            )


def _compensated(chunks: List[np.ndarray]) -> np.ndarray:
    stacked = np.asarray(chunks)
    real = [math.fsum(column) for column in stacked.real.T]
    imag = [math.fsum(column) for column in stacked.imag.T]
    return np.array(real) + 1j * np.array(imag)


def periodic_zeta_pair(s: ComplexInput, theta: float) -> Tuple[ComplexOutput, ComplexOutput]:
    """Evaluate Li_s(e^{2 pi i theta}) and Li_s(e^{-2 pi i theta}) together.

    Rational twists a/q share the q residue-class lattice sums between the two values.
    """
    _check_twist(theta)
    values, scalar = _as_array(s)
    _require_convergent(values)
    shape = np.shape(s)

    fraction = _rational_twist(theta)
    if fraction is None:
        logger.debug("irrational twist %r, summing directly", theta)
        plus, minus = _direct_periodic(values, theta)
        return _restore(plus, scalar, shape), _restore(minus, scalar, shape)

    a, q = fraction.numerator, fraction.denominator
    plus = np.zeros_like(values)
    minus = np.zeros_like(values)
    for r in range(1, q + 1):
        lattice = _lattice_zeta(values, float(r), float(q))
        phase = np.exp(2j * np.pi * a * r / q) if a else 1.0
        plus += phase * lattice
        minus += np.conj(phase) * lattice
    return _restore(plus, scalar, shape), _restore(minus, scalar, shape)


def periodic_zeta(s: ComplexInput, theta: float) -> ComplexOutput:
    """Evaluate the periodic zeta function Li_s(e^{2 pi i theta}) for Re(s) > 1."""
    return periodic_zeta_pair(s, theta)[0]


def periodic_zeta_tail(s: ComplexInput, theta: float, cutoff: int) -> ComplexOutput:
    """Evaluate sum_{n > cutoff} e^{2 pi i theta n} n^-s."""
    _check_twist(theta)
    if cutoff < 0:
        raise DomainError(f"cutoff must be non-negative, got {cutoff}")
    values, scalar = _as_array(s)
    _require_convergent(values)
    shape = np.shape(s)

    fraction = _rational_twist(theta)
    if fraction is None:
        plus, _ = _direct_periodic(values, theta)
        if cutoff:
            n = np.arange(1, cutoff + 1, dtype=float)
            powers = np.exp(-np.outer(np.log(n), values))
            plus = plus - (np.exp(2j * np.pi * theta * n)[:, None] * powers).sum(axis=0)
        return _restore(plus, scalar, shape)

    a, q = fraction.numerator, fraction.denominator
    tail = np.zeros_like(values)
    for r in range(1, q + 1):
        first = r + q * max(0, -(-(cutoff + 1 - r) // q))
        phase = np.exp(2j * np.pi * a * r / q) if a else 1.0
        tail += phase * _lattice_zeta(values, float(first), float(q))
    return _restore(tail, scalar, shape)


def complex_binomial(r: complex, k: int) -> complex:
    """Generalized binomial coefficient r (r - 1) ... (r - k + 1) / k!."""
    if k < 0:
        raise DomainError(f"k must be non-negative, got {k}")
    result = 1 + 0j
    for m in range(k):
        result *= (r - m) / (m + 1)
    return result


@lru_cache(maxsize=None)
def stieltjes_constants() -> StieltjesTable:
    """Return gamma_0 ... gamma_4, checked once against riemann_zeta near s = 1."""
    table = StieltjesTable(gamma=STIELTJES)
    validate_stieltjes_constants(table)
    return table


def validate_stieltjes_constants(table: Optional[StieltjesTable] = None) -> None:
    """Check that the truncated Laurent series reproduces zeta(1 + x) to order x^5.

    Raises:
        ConvergenceError: if the literals and riemann_zeta disagree.
    """
    table = table or StieltjesTable(gamma=STIELTJES)
    for x in (0.05, 0.025):
        series = 1 / x + sum(table.laurent_coefficient(n) * x**n for n in range(5))
        exact = riemann_zeta(1 + x).real
        if abs(series - exact) > 10 * x**5:
            raise ConvergenceError(
                f"Stieltjes constants disagree with zeta(1 + {x}): {series} vs {exact}"
            )
    logger.debug("Stieltjes constants validated against riemann_zeta")


def laurent_coefficient_fit(order: int = 4, points: int = 32, radius: float = 1.0) -> np.ndarray:
    """Taylor coefficients of zeta(1 + x) - 1/x from a stencil on the circle |x| = radius.

    The trapezoidal rule for the Cauchy integral is applied with ``points`` and with
    ``2 * points`` nodes; both estimates must agree to ``LAURENT_FIT_TOLERANCE``.

    Returns:
        Estimates of the coefficients (-1)^n gamma_n / n! for n = 0 ... order.

    Raises:
        ConvergenceError: if doubling the stencil moves a coefficient by more than the
            tolerance.
    """
    if order < 0 or points <= order or radius <= 0:
        raise DomainError(f"need 0 <= order < points and radius > 0, got {order}, {points}")

    def trapezoid(m: int) -> np.ndarray:
        nodes = radius * np.exp(2j * np.pi * np.arange(m) / m)
        coefficients = np.fft.fft(zeta_regular_part(nodes)) / m
        return coefficients[: order + 1].real / radius ** np.arange(order + 1)

    coarse, fine = trapezoid(points), trapezoid(2 * points)
    change = np.max(np.abs(fine - coarse))
    if change > LAURENT_FIT_TOLERANCE:
        raise ConvergenceError(f"stencil doubling moved a Laurent coefficient by {change:.3g}")
    return fine
