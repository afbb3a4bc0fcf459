"""Geodesic-word side of the Fredholm identity.

Traces of powers of the transfer operator are sums over hyperbolic words::

    tr(L^N) = sum over words of length N of chi(word) e^{-s l} / (1 - e^{-l})

where l is the displacement length of the word. Words with letters up to ``M`` are summed
explicitly; the words with a larger letter are added back through an asymptotic tail
correction. For a single letter the correction is exact, since with t = |tr| the weight
expands as sum_k binom(2s + 2k - 1, k) t^(-2s - 2k). Longer words use the leading-order
product form prod_i (|n_i| w)^(-2s).
"""

import cmath
import itertools
import logging
import math
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .classes import ComplexValue, ValidationReport
from .errors import ConvergenceError, DomainError, NotHyperbolicError
from .hyperbolic import (
    ConjugacyClassRecord,
    GroupWord,
    conjugacy_classes,
    displacement_length,
    word_matrix,
)
from .specfun import complex_binomial, periodic_zeta_pair, periodic_zeta_tail, riemann_zeta
from .transfer import build_matrix, determinant

__all__ = [
    "Character",
    "TraceEstimate",
    "LogDetEstimate",
    "EulerProductEstimate",
    "FactorizationCheck",
    "composition_trace",
    "operator_trace",
    "fredholm_from_traces",
    "log_det_reconstruction",
    "class_factor",
    "euler_product",
    "cover_euler_product",
    "factorization_check",
    "cross_validate",
]

logger = logging.getLogger(__name__)

WORD_BUDGET = 200_000
FACTOR_TOLERANCE = 1e-12
_SERIES_TOLERANCE = 1e-18


@dataclass(frozen=True)
class Character:
    """One-dimensional character S -> s_sign, T_w -> e^{2 pi i theta}.

    On a word gamma_{n_1} ... gamma_{n_N} it takes the value s_sign^N e^{2 pi i theta sum n_i}.
    """

    s_sign: int = 1
    theta: float = 0.0

    def __post_init__(self):
        if self.s_sign not in (1, -1):
            raise DomainError(f"s_sign must be +1 or -1, got {self.s_sign}")
        if not 0.0 <= self.theta < 1.0:
            raise DomainError(f"theta must lie in [0, 1), got {self.theta}")

    @classmethod
    def cover(cls, a: int, n: int, s_sign: int = 1) -> "Character":
        """The character attached to the factor det(1 - s_sign L^(a/n)) of the n-fold cover."""
        return cls(s_sign=s_sign, theta=(a % n) / n)

    def value(self, letters: Sequence[int]) -> complex:
        return self.s_sign ** len(letters) * cmath.exp(2j * math.pi * self.theta * sum(letters))


@dataclass(frozen=True)
class TraceEstimate:
    """Word-sum estimate of tr(L^N)."""

    order: int
    cutoff: int
    partial_sum: complex
    tail_correction: complex
    tail_bound: float
    words: int

    @property
    def value(self) -> complex:
        return self.partial_sum + self.tail_correction


@dataclass(frozen=True)
class LogDetEstimate:
    """exp(-sum tr(L^N) / N) with its remainder estimate."""

    value: complex
    remainder: float
    ratio: float
    traces: Tuple[TraceEstimate, ...]


@dataclass(frozen=True)
class EulerProductEstimate:
    """Truncated Euler product over primitive classes."""

    raw: complex
    log_tail_correction: complex
    classes: int
    factors: int

    @property
    def value(self) -> complex:
        return self.raw * cmath.exp(self.log_tail_correction)


@dataclass(frozen=True)
class FactorizationCheck:
    """Both sides of the cover factorization for the n-fold cover."""

    n: int
    determinant_product: complex
    cover_euler_product: complex
    cover_classes: int

    @property
    def difference(self) -> float:
        return abs(self.determinant_product - self.cover_euler_product)


def composition_trace(word: GroupWord, s: complex, chi_phase: complex = 1.0) -> complex:
    """chi_phase * e^{-s l} / (1 - e^{-l}) for the displacement length l of the word."""
    if abs(abs(chi_phase) - 1.0) > 1e-12:
        raise DomainError(f"character values have modulus one, got {chi_phase}")
    ell = displacement_length(word_matrix(word))
    return chi_phase * cmath.exp(-s * ell) / (1.0 - math.exp(-ell))


def _letters(bound: int) -> np.ndarray:
    return np.array([*range(-bound, 0), *range(1, bound + 1)], dtype=float)


def _word_blocks(order: int, cutoff: int, rotate: int = 0) -> Iterator[np.ndarray]:
    """Yield all words as rows, one block per first letter, in itertools.product order."""
    letters = _letters(cutoff)
    if order == 1:
        yield letters[:, None]
        return
    grids = np.meshgrid(*[letters] * (order - 1), indexing="ij")
    rest = np.stack([grid.ravel() for grid in grids], axis=1)
    for first in letters:
        block = np.hstack([np.full((len(rest), 1), first), rest])
        yield np.roll(block, -rotate, axis=1) if rotate else block


def _block_weights(block: np.ndarray, s: complex, w: float, chi: Character) -> np.ndarray:
    a = np.ones(len(block))
    b = np.zeros(len(block))
    c = np.zeros(len(block))
    d = np.ones(len(block))
    for column in block.T:
        x = column * w
        a, b, c, d = b, -a + b * x, d, -c + d * x
    if max(np.abs(b).max(), np.abs(d).max()) > 1e300:
        raise OverflowError("word matrix entries exceed 1e300; reduce the enumeration depth")
    t = np.abs(a + d)
    if np.any(t <= 2.0):
        raise NotHyperbolicError("enumerated word with |tr| <= 2")
    # u = e^{-l/2}
    u = 2.0 / (t * (1.0 + np.sqrt(1.0 - 4.0 / t**2)))
    weights = np.exp(2 * s * np.log(u)) / (1.0 - u * u)
    phases = chi.s_sign ** block.shape[1] * np.exp(2j * np.pi * chi.theta * block.sum(axis=1))
    return phases * weights


def _full_and_tail(r: complex, theta: float, cutoff: int) -> Tuple[complex, complex]:
    """sum over n != 0 of e^{2 pi i theta n} |n|^-r, in full and over |n| > cutoff."""
    plus, minus = periodic_zeta_pair(r, theta)
    conjugate = (1.0 - theta) % 1.0
    tail = periodic_zeta_tail(r, theta, cutoff) + periodic_zeta_tail(r, conjugate, cutoff)
    return plus + minus, tail


def _single_letter_tail(s: complex, w: float, chi: Character, cutoff: int) -> complex:
    ratio = 2.0 / (cutoff * w)
    terms = max(1, math.ceil(math.log(_SERIES_TOLERANCE) / (2 * math.log(ratio))) + 1)
    k = np.arange(terms)
    r = 2 * s + 2 * k
    tails = np.asarray(periodic_zeta_tail(r, chi.theta, cutoff)) + np.asarray(
        periodic_zeta_tail(r, (1.0 - chi.theta) % 1.0, cutoff)
    )
    binomials = np.array([complex_binomial(2 * s + 2 * j - 1, j) for j in range(terms)])
    return complex(chi.s_sign * np.sum(binomials * np.exp(-r * math.log(w)) * tails))


def _tail_correction(order: int, s: complex, w: float, chi: Character, cutoff: int) -> complex:
    if order == 1:
        return _single_letter_tail(s, w, chi, cutoff)
    full, tail = _full_and_tail(2 * s, chi.theta, cutoff)
    scale = chi.s_sign**order * cmath.exp(-2 * s * order * math.log(w))
    return complex(scale * (full**order - (full - tail) ** order))


def _tail_bound(order: int, s: complex, w: float, cutoff: int) -> float:
    sigma = s.real
    omitted = 2 * w ** (-2 * sigma) * cutoff ** (1 - 2 * sigma) / (2 * sigma - 1)
    every = 2 * w ** (-2 * sigma) * riemann_zeta(2 * sigma).real
    shortest = 2.0 * math.acosh(w / 2.0)
    return 2.0 * order * omitted * every ** (order - 1) / (1.0 - math.exp(-shortest))


def operator_trace(
    N: int,
    M: int,
    s: complex,
    w: float,
    theta: float = 0.0,
    *,
    s_sign: int = 1,
    rotate: int = 0,
) -> TraceEstimate:
    """Estimate tr(L^N) from the (2M)^N words with letters |n_i| <= M.

    Args:
        N: word length, the power of the operator.
        M: letter cutoff.
        s: spectral parameter with Re(s) > 1/2.
        w: Hecke width, w > 2.
        theta: twist of T_w.
        s_sign: value of the character on S.
        rotate: evaluate every word through its rotation by this many letters.

    Returns:
        The explicit partial sum, the tail correction for omitted letters and a crude
        reported bound on the omitted contribution.
    """
    s = complex(s)
    if s.real <= 0.5:
        raise DomainError(f"need Re(s) > 1/2, got {s}")
    if w <= 2:
        raise DomainError(f"w must exceed 2, got {w}")
    if N < 1 or M < 1:
        raise DomainError(f"need N >= 1 and M >= 1, got N={N}, M={M}")
    chi = Character(s_sign=s_sign, theta=theta)

    block_sums = [
        np.sum(_block_weights(block, s, w, chi)) for block in _word_blocks(N, M, rotate)
    ]
    partial = complex(
        math.fsum(total.real for total in block_sums),
        math.fsum(total.imag for total in block_sums),
    )
    estimate = TraceEstimate(
        order=N,
        cutoff=M,
        partial_sum=partial,
        tail_correction=_tail_correction(N, s, w, chi, M),
        tail_bound=_tail_bound(N, s, w, M),
        words=(2 * M) ** N,
    )
    logger.debug("tr(L^%d) over %d words: %r", N, estimate.words, estimate.value)
    return estimate


def fredholm_from_traces(traces: Sequence[complex]) -> Tuple[complex, float, float]:
    """Return exp(-sum_N tr_N / N), the remainder estimate and the observed ratio.

    Raises:
        ConvergenceError: if the last two traces do not decrease.
    """
    if not traces:
        return 1.0 + 0j, 0.0, 0.0
    log_value = -sum(trace / order for order, trace in enumerate(traces, start=1))
    ratio = 0.0
    if len(traces) > 1 and traces[-2] != 0:
        ratio = abs(traces[-1]) / abs(traces[-2])
    if ratio >= 1.0:
        raise ConvergenceError(f"traces of L^N do not decay (observed ratio {ratio:.3g})")
    remainder = abs(traces[-1]) / (len(traces) * (1.0 - ratio))
    return cmath.exp(log_value), remainder, ratio


def log_det_reconstruction(
    s: complex,
    w: float,
    theta: float = 0.0,
    N_max: int = 8,
    M: int = 200,
    *,
    s_sign: int = 1,
    word_budget: int = WORD_BUDGET,
) -> LogDetEstimate:
    """Rebuild det(1 - L) from word traces through the Fredholm expansion at u = 1.

    The letter cutoff for order N is min(M, budget^(1/N) / 2) so that no order enumerates
    more than ``word_budget`` words; the tail corrections absorb the rest.
    """
    estimates = []
    for order in range(1, N_max + 1):
        cutoff = max(1, min(M, int(word_budget ** (1.0 / order)) // 2))
        estimates.append(operator_trace(order, cutoff, s, w, theta, s_sign=s_sign))
    value, remainder, ratio = fredholm_from_traces([estimate.value for estimate in estimates])
    logger.info(
        "log-det reconstruction through N=%d: %r (remainder %.3g)", N_max, value, remainder
    )
    return LogDetEstimate(value=value, remainder=remainder, ratio=ratio, traces=tuple(estimates))


def class_factor(chi_value: complex, s: complex, ell: float, K: int) -> complex:
    """prod_{k=0}^{K} (1 - chi e^{-(s + k) l}), the Euler factor of one primitive class."""
    factor = 1.0 + 0j
    for k in range(K + 1):
        factor *= 1.0 - chi_value * cmath.exp(-(s + k) * ell)
    return factor


def _factor_count(sigma: float, ell: float) -> int:
    K = 0
    while math.exp(-(sigma + K + 1) * ell) / (1.0 - math.exp(-ell)) >= FACTOR_TOLERANCE:
        K += 1
    return K


def euler_product(
    s: complex,
    w: float,
    chi: Character = Character(),
    L_max: float = math.inf,
    M: int = 50,
    N_max: int = 3,
    classes: Optional[Sequence[ConjugacyClassRecord]] = None,
) -> EulerProductEstimate:
    """Truncated Euler product of Z_{Gamma_w}(s, chi) over primitive classes.

    Classes come from the words of length <= N_max with letters |n_i| <= M, restricted to
    displacement length <= L_max. When L_max is unbounded the omitted letters are folded
    back in through the trace tail corrections.
    """
    s = complex(s)
    if w <= 2:
        raise DomainError(f"w must exceed 2, got {w}")
    if classes is None:
        classes = conjugacy_classes(N_max, M, w)
    primitive = [
        record for record in classes if record.primitive and record.displacement <= L_max
    ]
    if not primitive:
        return EulerProductEstimate(raw=1.0 + 0j, log_tail_correction=0j, classes=0, factors=0)

    lengths = np.array([record.displacement for record in primitive])
    phases = np.array([chi.value(record.word) for record in primitive])
    K = _factor_count(s.real, lengths.min())
    terms = phases[:, None] * np.exp(-np.outer(lengths, s + np.arange(K + 1)))
    raw = cmath.exp(complex(np.sum(np.log1p(-terms))))

    correction = 0j
    if math.isinf(L_max):
        correction = -sum(
            _tail_correction(order, s, w, chi, M) / order for order in range(1, N_max + 1)
        )
    logger.info("Euler product over %d primitive classes (K=%d)", len(primitive), K)
    return EulerProductEstimate(
        raw=raw, log_tail_correction=correction, classes=len(primitive), factors=K
    )


def _cover_order(word: Sequence[int], n: int) -> int:
    """Order of ((-1)^N, e^{2 pi i sum n_i / n}) in Z/2 x Z/n."""
    parity = 2 if len(word) % 2 else 1
    twist = n // math.gcd(sum(word) % n, n)
    return parity * twist // math.gcd(parity, twist)


def cover_euler_product(
    s: complex,
    w: float,
    n: int,
    M: int = 50,
    N_max: int = 3,
    classes: Optional[Sequence[ConjugacyClassRecord]] = None,
) -> EulerProductEstimate:
    """Truncated Euler product of the n-fold cover group of Gamma_w.

    The cover is the kernel of gamma -> (S-count mod 2, sum n_i mod n). A primitive class of
    Gamma_w whose image has order m splits into 2n/m primitive classes of the cover, each of
    length m l. The omitted letters enter through the trace tail corrections of the 2n
    characters of the quotient.
    """
    s = complex(s)
    if w <= 2:
        raise DomainError(f"w must exceed 2, got {w}")
    if n < 1:
        raise DomainError(f"cover degree must be positive, got {n}")
    if classes is None:
        classes = conjugacy_classes(N_max, M, w)
    primitive = [record for record in classes if record.primitive]
    if not primitive:
        return EulerProductEstimate(raw=1.0 + 0j, log_tail_correction=0j, classes=0, factors=0)

    orders = np.array([_cover_order(record.word, n) for record in primitive])
    copies = 2 * n // orders
    lengths = orders * np.array([record.displacement for record in primitive])
    K = _factor_count(s.real, lengths.min())
    terms = np.exp(-np.outer(lengths, s + np.arange(K + 1)))
    raw = cmath.exp(complex(np.sum(copies[:, None] * np.log1p(-terms))))

    correction = -sum(
        _tail_correction(order, s, w, Character.cover(a, n, sign), M) / order
        for a, sign in itertools.product(range(n), (1, -1))
        for order in range(1, N_max + 1)
    )
    logger.info(
        "cover Euler product for n=%d over %d primitive classes (K=%d)", n, copies.sum(), K
    )
    return EulerProductEstimate(
        raw=raw, log_tail_correction=correction, classes=int(copies.sum()), factors=K
    )


def factorization_check(
    w: float,
    s: float,
    n: int,
    k: int = 30,
    N_max: int = 3,
    M: int = 50,
) -> FactorizationCheck:
    """Compare prod over a < n of det(1 -+ L^(a/n)) with the cover group Euler product."""
    classes = conjugacy_classes(N_max, M, w)
    determinant_product = 1.0 + 0j
    for a, sign in itertools.product(range(n), (1, -1)):
        theta = Character.cover(a, n, sign).theta
        determinant_product *= determinant(build_matrix(k, s, w, theta), sign).value
    cover = cover_euler_product(s, w, n, M=M, N_max=N_max, classes=classes)
    return FactorizationCheck(
        n=n,
        determinant_product=determinant_product,
        cover_euler_product=cover.value,
        cover_classes=cover.classes,
    )


def cross_validate(
    w: float,
    s: float,
    theta: float = 0.0,
    k: int = 30,
    N_max: int = 8,
    M: int = 200,
    euler_N_max: int = 3,
    euler_M: int = 50,
) -> ValidationReport:
    """Evaluate det(1 - L) three ways: matrix determinant, trace expansion, Euler product."""
    if s <= 0.5:
        raise DomainError(f"need s > 1/2, got {s}")
    matrix_value = determinant(build_matrix(k, s, w, theta)).value
    log_det = log_det_reconstruction(s, w, theta, N_max, M)
    euler = euler_product(s, w, Character(theta=theta), M=euler_M, N_max=euler_N_max)
    return ValidationReport(
        w=w,
        s=s,
        theta=theta,
        k=k,
        determinant=ComplexValue.of(matrix_value),
        log_det=ComplexValue.of(log_det.value),
        log_det_remainder=log_det.remainder,
        euler_product=ComplexValue.of(euler.value),
        euler_classes=euler.classes,
        det_vs_log_det=abs(matrix_value - log_det.value),
        det_vs_euler=abs(matrix_value - euler.value),
        log_det_vs_euler=abs(log_det.value - euler.value),
    )
