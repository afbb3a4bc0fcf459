"""Elements, words and conjugacy classes of the Hecke group Gamma_w.

Gamma_w is generated by S: z -> -1/z and T_w: z -> z + w. The hyperbolic words used
throughout are products of gamma_n = S T_w^n = [[0, -1], [1, n w]] with n != 0.
"""

import itertools
import logging
import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterator, List, Sequence, Tuple

from .errors import DomainError, NotHyperbolicError

__all__ = [
    "MoebiusElement",
    "GroupWord",
    "ConjugacyClassRecord",
    "generator",
    "word_matrix",
    "displacement_length",
    "enumerate_words",
    "canonical_rotation",
    "primitive_period",
    "conjugacy_classes",
]

logger = logging.getLogger(__name__)

ENTRY_LIMIT = 1e300
DET_TOLERANCE = 1e-12


@dataclass(frozen=True)
class MoebiusElement:
    """A 2x2 real matrix of determinant one, taken up to sign."""

    a: float
    b: float
    c: float
    d: float

    def __matmul__(self, other: "MoebiusElement") -> "MoebiusElement":
        product = MoebiusElement(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )
        if max(abs(product.a), abs(product.b), abs(product.c), abs(product.d)) > ENTRY_LIMIT:
            raise OverflowError("matrix entry exceeds 1e300; reduce the enumeration depth")
        return product

    @property
    def trace(self) -> float:
        """|a + d|, well defined on PSL(2, R)."""
        return abs(self.a + self.d)

    @property
    def determinant(self) -> float:
        return self.a * self.d - self.b * self.c

    @property
    def is_hyperbolic(self) -> bool:
        return self.trace > 2.0


def generator(n: int, w: float) -> MoebiusElement:
    """Return gamma_n = S T_w^n."""
    return MoebiusElement(0.0, -1.0, 1.0, n * w)


@dataclass(frozen=True)
class GroupWord:
    """The element gamma_{n_1} ... gamma_{n_N} of Gamma_w."""

    letters: Tuple[int, ...]
    w: float

    def __post_init__(self):
        if not self.letters:
            raise DomainError("a group word needs at least one letter")
        if 0 in self.letters:
            raise DomainError(f"letters must be non-zero, got {self.letters}")
        if self.w <= 2:
            raise DomainError(f"w must exceed 2, got {self.w}")

    def __len__(self) -> int:
        return len(self.letters)

    def rotate(self, shift: int) -> "GroupWord":
        shift %= len(self.letters)
        return GroupWord(self.letters[shift:] + self.letters[:shift], self.w)


@dataclass(frozen=True)
class ConjugacyClassRecord:
    """A hyperbolic conjugacy class, stored through its canonical cyclic word."""

    word: Tuple[int, ...]
    displacement: float
    word_length: int
    primitive: bool
    multiplicity: int

    @property
    def representatives(self) -> int:
        """Number of distinct cyclic rotations of the word, N / m."""
        return self.word_length // self.multiplicity

    @property
    def primitive_root(self) -> Tuple[int, ...]:
        return self.word[: self.representatives]


def word_matrix(word: GroupWord) -> MoebiusElement:
    """Multiply out the word, composing left to right.

    Raises:
        OverflowError: if an entry exceeds 1e300.
    """
    matrix = reduce(
        lambda product, n: product @ generator(n, word.w),
        word.letters[1:],
        generator(word.letters[0], word.w),
    )
    scale = max(1.0, abs(matrix.a * matrix.d), abs(matrix.b * matrix.c))
    if abs(matrix.determinant - 1.0) > DET_TOLERANCE * scale:
        logger.warning("determinant drifted to %r for word %s", matrix.determinant, word.letters)
    return matrix


def displacement_length(g: MoebiusElement) -> float:
    """Return l with 2 cosh(l / 2) = |tr g|."""
    if not g.is_hyperbolic:
        raise NotHyperbolicError(f"|tr| = {g.trace} <= 2")
    return 2.0 * math.acosh(g.trace / 2.0)


def _letters(bound: int) -> List[int]:
    return [*range(-bound, 0), *range(1, bound + 1)]


def enumerate_words(N: int, M: int, w: float) -> Iterator[GroupWord]:
    """Yield each of the (2M)^N words with letters in {-M, ..., -1, 1, ..., M}."""
    if w <= 2:
        raise DomainError(f"w must exceed 2, got {w}")
    for letters in itertools.product(_letters(M), repeat=N):
        yield GroupWord(letters, w)


def canonical_rotation(letters: Sequence[int]) -> Tuple[int, ...]:
    """Lexicographically smallest cyclic rotation."""
    letters = tuple(letters)
    return min(letters[i:] + letters[:i] for i in range(len(letters)))


def primitive_period(letters: Sequence[int]) -> int:
    """Smallest p such that the word is its own rotation by p."""
    letters = tuple(letters)
    size = len(letters)
    for period in range(1, size + 1):
        if size % period == 0 and letters[period:] + letters[:period] == letters:
            return period
    return size


def conjugacy_classes(N_max: int, M: int, w: float) -> List[ConjugacyClassRecord]:
    """Group the words of length <= N_max into cyclic classes.

    Each class appears once, through its canonical rotation, with its displacement length,
    its multiplicity m and the primitive flag (m == 1).
    """
    if w <= 2:
        raise DomainError(f"w must exceed 2, got {w}")
    records = []
    for size in range(1, N_max + 1):
        for letters in itertools.product(_letters(M), repeat=size):
            if letters != canonical_rotation(letters):
                continue
            multiplicity = size // primitive_period(letters)
            records.append(
                ConjugacyClassRecord(
                    word=letters,
                    displacement=displacement_length(word_matrix(GroupWord(letters, w))),
                    word_length=size,
                    primitive=multiplicity == 1,
                    multiplicity=multiplicity,
                )
            )
        logger.debug("collected classes through word length %d (M=%d)", size, M)
    return records
