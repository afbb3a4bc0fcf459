"""Finite matrix models of the Hecke transfer operator and their determinants.

In the monomial basis z^j of holomorphic functions on the unit disk, the transfer
operator twisted by T_w -> e^{2 pi i theta} has matrix entries

    a_ij = [(-1)^(i+j) Li_r(e^{2 pi i theta}) + Li_r(e^{-2 pi i theta})] w^-r binom(r - 1, i)

with r = 2s + i + j. At theta = 0 this is ((-1)^(i+j) + 1) zeta(r) w^-r binom(r - 1, i).
Row i is the output Taylor degree and column j the input degree.
"""

import cmath
import logging
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgWarning, lu_factor

from .errors import DomainError
from .specfun import complex_binomial, periodic_zeta_pair

__all__ = [
    "TransferMatrix",
    "DeterminantValue",
    "entry",
    "build_matrix",
    "determinant",
    "selberg_zeta_approximation",
]

logger = logging.getLogger(__name__)

REALITY_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class TransferMatrix:
    """The k x k matrix A_k(s, w, theta)."""

    k: int
    s: complex
    w: float
    theta: float
    entries: np.ndarray


@dataclass(frozen=True)
class DeterminantValue:
    """det(1 - sign * A_k(s, w, theta))."""

    value: complex
    k: int
    s: complex
    w: float
    theta: float
    sign: int

    @property
    def real(self) -> float:
        return self.value.real

    @property
    def imaginary_residue(self) -> float:
        """|Im| relative to 1 + |value|; small whenever the determinant is real."""
        return abs(self.value.imag) / (1.0 + abs(self.value))


def _check_parameters(w: float, theta: float) -> None:
    if w <= 2:
        raise DomainError(f"w must exceed 2, got {w}")
    if not 0.0 <= theta < 1.0:
        raise DomainError(f"theta must lie in [0, 1), got {theta}")


def entry(i: int, j: int, s: complex, w: float, theta: float = 0.0) -> complex:
    """Return the single matrix entry a_ij(s, w, theta)."""
    _check_parameters(w, theta)
    if i < 0 or j < 0:
        raise DomainError(f"indices must be non-negative, got ({i}, {j})")
    r = 2 * complex(s) + i + j
    if r.real <= 1:
        raise DomainError(f"zeta argument 2s + i + j = {r} needs real part > 1")
    plus, minus = periodic_zeta_pair(r, theta)
    return ((-1) ** (i + j) * plus + minus) * cmath.exp(-r * math.log(w)) * complex_binomial(
        r - 1, i
    )


def _binomial_table(x: np.ndarray, k: int) -> np.ndarray:
    """binom(x_d, i) for every x_d and 0 <= i < k, built as running products."""
    steps = (x[:, None] - np.arange(k - 1)) / np.arange(1, k)
    return np.hstack([np.ones((len(x), 1), dtype=complex), np.cumprod(steps, axis=1)])


def build_matrix(k: int, s: complex, w: float, theta: float = 0.0) -> TransferMatrix:
    """Assemble A_k(s, w, theta).

    The periodic zeta values and powers of w depend on i + j only and are computed once for
    each of the 2k - 1 diagonals.
    """
    _check_parameters(w, theta)
    if k < 1:
        raise DomainError(f"matrix dimension must be positive, got {k}")
    s = complex(s)
    if s.real <= 0.5:
        raise DomainError(f"need Re(s) > 1/2, got {s}")

    diagonal = np.arange(2 * k - 1)
    r = 2 * s + diagonal
    plus, minus = periodic_zeta_pair(r, theta)
    parity = np.where(diagonal % 2 == 0, 1.0, -1.0)
    coefficients = (parity * plus + minus) * np.exp(-r * math.log(w))
    binomials = _binomial_table(r - 1, k)

    rows, columns = np.indices((k, k))
    entries = coefficients[rows + columns] * binomials[rows + columns, rows]
    return TransferMatrix(k=k, s=s, w=w, theta=theta, entries=entries)


def determinant(m: TransferMatrix, sign: int = 1) -> DeterminantValue:
    """det(1 - sign * A) from an LU factorization with partial pivoting."""
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign}")
    with warnings.catch_warnings():
        # an exactly singular 1 - A is a zero of the determinant, not a failure
        warnings.simplefilter("ignore", LinAlgWarning)
        lu, pivots = lu_factor(np.eye(m.k) - sign * m.entries)
    swaps = np.count_nonzero(pivots != np.arange(m.k))
    value = complex((-1) ** swaps * np.prod(np.diag(lu)))

    result = DeterminantValue(value=value, k=m.k, s=m.s, w=m.w, theta=m.theta, sign=sign)
    if m.s.imag == 0 and result.imaginary_residue > REALITY_TOLERANCE:
        logger.warning(
            "determinant at real s=%r, w=%r, theta=%r has imaginary residue %.3g",
            m.s.real,
            m.w,
            m.theta,
            result.imaginary_residue,
        )
    return result


def selberg_zeta_approximation(s: complex, w: float, k: int) -> complex:
    """D_k(s, w) = det(1 - A_k(s, w)), the k-th approximation of Z_{Gamma_w}(s)."""
    return determinant(build_matrix(k, s, w)).value
