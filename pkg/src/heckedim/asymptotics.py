"""Large-w expansion of delta(w).

Writing delta = (1 + x) / 2, t = log w and u = 1 / w, the leading equation
2 zeta(1 + x) / w^(1 + x) = 1 becomes

    x = 2u + sum_m Q_m(t) 2u x^m

where Q_{n+1}(t) is the coefficient of x^n in zeta(1 + x) e^(-x t) with the pole removed.
Substituting x into itself until the u^5 coefficient settles gives

    x = 2u + sum_j 2 P_j(t) u^(j + 1),   delta = 1/2 + 1/w + sum_j P_j(log w) / w^(j + 1).

Coefficients are doubles; P_j is computed numerically, not as symbols in the gamma_n.
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple, Union

import numpy as np
from numpy.polynomial import Polynomial
from scipy.signal import convolve2d

from .errors import ConvergenceError, DomainError
from .specfun import stieltjes_constants

__all__ = [
    "U_MAX",
    "T_MAX",
    "TruncatedBivariatePoly",
    "QPolySequence",
    "q_polynomials",
    "p_polynomials",
    "delta_expansion",
    "expansion_terms",
]

logger = logging.getLogger(__name__)

U_MAX = 5
T_MAX = 5
MIN_ITERATIONS = 6
FIXED_POINT_TOLERANCE = 1e-14
EXPANSION_MIN_W = 10.0


class TruncatedBivariatePoly:
    """sum c[a, b] u^a t^b with a <= U_MAX and b <= T_MAX; products drop higher terms."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: np.ndarray):
        coefficients = np.atleast_2d(np.asarray(coefficients, dtype=float))
        self.coefficients = np.zeros((U_MAX + 1, T_MAX + 1))
        rows = min(U_MAX + 1, coefficients.shape[0])
        columns = min(T_MAX + 1, coefficients.shape[1])
        self.coefficients[:rows, :columns] = coefficients[:rows, :columns]

    @classmethod
    def constant(cls, value: float) -> "TruncatedBivariatePoly":
        return cls(np.array([[value]]))

    @classmethod
    def u(cls) -> "TruncatedBivariatePoly":
        return cls(np.array([[0.0], [1.0]]))

    @classmethod
    def from_t_polynomial(cls, poly: Polynomial, u_power: int = 0) -> "TruncatedBivariatePoly":
        """Embed p(t) u^u_power."""
        coefficients = np.zeros((u_power + 1, len(poly.coef)))
        coefficients[u_power] = poly.coef
        return cls(coefficients)

    def __add__(self, other: Union["TruncatedBivariatePoly", float]) -> "TruncatedBivariatePoly":
        if not isinstance(other, TruncatedBivariatePoly):
            other = TruncatedBivariatePoly.constant(other)
        return TruncatedBivariatePoly(self.coefficients + other.coefficients)

    __radd__ = __add__

    def __sub__(self, other: "TruncatedBivariatePoly") -> "TruncatedBivariatePoly":
        return TruncatedBivariatePoly(self.coefficients - other.coefficients)

    def __mul__(self, other: Union["TruncatedBivariatePoly", float]) -> "TruncatedBivariatePoly":
        if isinstance(other, TruncatedBivariatePoly):
            return TruncatedBivariatePoly(convolve2d(self.coefficients, other.coefficients))
        return TruncatedBivariatePoly(self.coefficients * other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "TruncatedBivariatePoly":
        result = TruncatedBivariatePoly.constant(1.0)
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedBivariatePoly):
            return NotImplemented
        return bool(np.array_equal(self.coefficients, other.coefficients))

    def __repr__(self) -> str:
        return f"TruncatedBivariatePoly({self.coefficients.tolist()!r})"

    def u_coefficient(self, power: int) -> Polynomial:
        """The coefficient of u^power, a polynomial in t."""
        return Polynomial(self.coefficients[power])

    def evaluate(self, u: float, t: float) -> float:
        return float(np.polynomial.polynomial.polyval2d(u, t, self.coefficients))

    def max_difference(self, other: "TruncatedBivariatePoly") -> float:
        return float(np.abs(self.coefficients - other.coefficients).max())


@dataclass(frozen=True)
class QPolySequence:
    """Q_1 ... Q_order, indexed from one."""

    polynomials: Tuple[Polynomial, ...]

    def __getitem__(self, m: int) -> Polynomial:
        if m < 1:
            raise IndexError(m)
        return self.polynomials[m - 1]

    def __len__(self) -> int:
        return len(self.polynomials)


def q_polynomials(order: int = 5) -> QPolySequence:
    """Q_{n+1}(t) = (-t)^(n+1)/(n+1)! + sum_a (-1)^a gamma_a / a! (-t)^(n-a) / (n-a)!."""
    if not 1 <= order <= 5:
        raise DomainError(f"Q polynomials are available up to order 5, got {order}")
    gamma = stieltjes_constants().gamma
    polynomials = []
    for n in range(order):
        coefficients = np.zeros(n + 2)
        coefficients[n + 1] = (-1) ** (n + 1) / math.factorial(n + 1)
        for a in range(n + 1):
            coefficients[n - a] += (
                (-1) ** a * gamma[a] / math.factorial(a) * (-1) ** (n - a) / math.factorial(n - a)
            )
        polynomials.append(Polynomial(coefficients))
    return QPolySequence(tuple(polynomials))


@lru_cache(maxsize=None)
def _fixed_point() -> TruncatedBivariatePoly:
    q = q_polynomials(5)
    two_u = 2.0 * TruncatedBivariatePoly.u()
    weighted = [TruncatedBivariatePoly.from_t_polynomial(q[m]) * two_u for m in range(1, 6)]

    x = two_u
    change = math.inf
    for iteration in range(1, MIN_ITERATIONS + 1):
        updated = two_u
        for m, term in enumerate(weighted, start=1):
            updated = updated + term * x**m
        change = updated.max_difference(x)
        x = updated
        logger.debug("substitution %d changed coefficients by %.3g", iteration, change)
    if change > FIXED_POINT_TOLERANCE:
        raise ConvergenceError(f"substitution has not settled: last change {change:.3g}")
    return x


def p_polynomials(order: int = 4) -> List[Polynomial]:
    """P_1 ... P_order read off x = 2u + sum_j 2 P_j(t) u^(j + 1)."""
    if not 1 <= order <= 4:
        raise DomainError(f"P polynomials are trusted up to order 4, got {order}")
    x = _fixed_point()
    return [(x.u_coefficient(j + 1) / 2.0).trim() for j in range(1, order + 1)]


def expansion_terms(w: float) -> List[float]:
    """The terms 1/2, 1/w, P_1(log w)/w^2, ..., P_4(log w)/w^5."""
    if w < EXPANSION_MIN_W:
        raise DomainError(f"the expansion is evaluated for w >= {EXPANSION_MIN_W}, got {w}")
    t = math.log(w)
    return [0.5, 1.0 / w] + [
        float(poly(t)) / w ** (j + 1) for j, poly in enumerate(p_polynomials(4), start=1)
    ]


def delta_expansion(w: float) -> float:
    """1/2 + 1/w + sum_{j <= 4} P_j(log w) / w^(j + 1)."""
    return math.fsum(expansion_terms(w))
