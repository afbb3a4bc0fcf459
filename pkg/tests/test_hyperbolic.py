"""
Tests for group elements, words and conjugacy classes
"""

import itertools
import math

import pytest

from heckedim.errors import DomainError, NotHyperbolicError
from heckedim.hyperbolic import (
    ConjugacyClassRecord,
    GroupWord,
    MoebiusElement,
    canonical_rotation,
    conjugacy_classes,
    displacement_length,
    enumerate_words,
    generator,
    primitive_period,
    word_matrix,
)


def test_single_letter_matrix():
    assert word_matrix(GroupWord((1,), 3.0)) == MoebiusElement(0.0, -1.0, 1.0, 3.0)
    assert generator(-2, 2.5).trace == 5.0


def test_two_letter_matrix():
    matrix = word_matrix(GroupWord((1, -1), 3.0))
    assert matrix == MoebiusElement(-1.0, 3.0, 3.0, -10.0)
    assert matrix.trace == 11.0
    assert displacement_length(matrix) == pytest.approx(2 * math.acosh(5.5), rel=1e-15)


def test_displacement_length_examples():
    assert displacement_length(word_matrix(GroupWord((1,), 3.0))) == pytest.approx(
        1.9248473002, abs=1e-10
    )
    assert displacement_length(MoebiusElement(math.cosh(1), 0.0, 0.0, math.cosh(1))) == (
        pytest.approx(2.0, rel=1e-14)
    )


@pytest.mark.parametrize("w", [2.5, 3.0, 10.0])
def test_single_letter_displacement(w):
    for n in (-5, -1, 1, 2, 7):
        ell = displacement_length(word_matrix(GroupWord((n,), w)))
        assert ell == pytest.approx(2 * math.acosh(abs(n) * w / 2), rel=1e-14)


def test_not_hyperbolic():
    identity = MoebiusElement(1.0, 0.0, 0.0, 1.0)
    assert not identity.is_hyperbolic
    with pytest.raises(NotHyperbolicError):
        displacement_length(identity)
    # parabolic T_w
    with pytest.raises(NotHyperbolicError):
        displacement_length(MoebiusElement(1.0, 3.0, 0.0, 1.0))


def test_overflow_guard():
    big = MoebiusElement(1e200, 0.0, 0.0, 1e-200)
    with pytest.raises(OverflowError):
        big @ big


def test_group_word_validation():
    with pytest.raises(DomainError):
        GroupWord((), 3.0)
    with pytest.raises(DomainError):
        GroupWord((1, 0, 2), 3.0)
    with pytest.raises(DomainError):
        GroupWord((1,), 2.0)
    assert len(GroupWord((1, -2, 3), 3.0)) == 3
    assert GroupWord((1, -2, 3), 3.0).rotate(1).letters == (-2, 3, 1)


def test_enumerate_words():
    assert [word.letters for word in enumerate_words(1, 2, 3.0)] == [(-2,), (-1,), (1,), (2,)]
    assert {word.letters for word in enumerate_words(2, 1, 3.0)} == {
        (1, 1),
        (1, -1),
        (-1, 1),
        (-1, -1),
    }
    words = [word.letters for word in enumerate_words(3, 3, 3.0)]
    assert len(words) == 216
    assert len(set(words)) == 216


@pytest.mark.parametrize("w", [2.5, 3.0, 10.0])
def test_determinant_one_and_hyperbolic(w):
    for size in range(1, 5):
        for word in enumerate_words(size, 5, w):
            matrix = word_matrix(word)
            assert abs(matrix.determinant - 1.0) <= 1e-12
            assert matrix.is_hyperbolic


def test_displacement_is_cyclic_invariant():
    for size in range(1, 5):
        for letters in itertools.product([-3, -2, -1, 1, 2, 3], repeat=size):
            word = GroupWord(letters, 3.0)
            ell = displacement_length(word_matrix(word))
            for shift in range(1, size):
                rotated = displacement_length(word_matrix(word.rotate(shift)))
                assert rotated == pytest.approx(ell, rel=1e-12)


def test_power_has_multiple_length():
    ell = displacement_length(word_matrix(GroupWord((1,), 3.0)))
    squared = displacement_length(word_matrix(GroupWord((1, 1), 3.0)))
    assert squared == pytest.approx(2 * ell, rel=1e-14)


def test_canonical_rotation_and_period():
    assert canonical_rotation((2, -1, 1)) == (-1, 1, 2)
    assert canonical_rotation((1, -1)) == canonical_rotation((-1, 1)) == (-1, 1)
    assert primitive_period((1, 2, 1, 2)) == 2
    assert primitive_period((1, 1, 1)) == 1
    assert primitive_period((1, 2, 2)) == 3


def test_conjugacy_classes_small():
    classes = {record.word: record for record in conjugacy_classes(2, 1, 3.0)}
    assert set(classes) == {(-1,), (1,), (-1, -1), (-1, 1), (1, 1)}

    square = classes[(1, 1)]
    assert not square.primitive
    assert square.multiplicity == 2
    assert square.representatives == 1
    assert square.primitive_root == (1,)

    mixed = classes[(-1, 1)]
    assert mixed.primitive
    assert mixed.multiplicity == 1
    assert mixed.representatives == 2
    assert mixed.displacement == pytest.approx(2 * math.acosh(5.5), rel=1e-15)

    for letters in ((-1,), (1,)):
        assert classes[letters].primitive
        assert classes[letters].multiplicity == 1


def test_class_record_properties():
    record = ConjugacyClassRecord(
        word=(1, 2, 1, 2), displacement=4.0, word_length=4, primitive=False, multiplicity=2
    )
    assert record.representatives == 2
    assert record.primitive_root == (1, 2)


def test_multiplicity_bookkeeping():
    s, w, size, bound = 0.8, 3.0, 3, 2
    over_words = math.fsum(
        math.exp(-s * displacement_length(word_matrix(word)))
        for word in enumerate_words(size, bound, w)
    )
    over_classes = math.fsum(
        record.representatives * math.exp(-s * record.displacement)
        for record in conjugacy_classes(size, bound, w)
        if record.word_length == size
    )
    assert over_classes == pytest.approx(over_words, rel=1e-12)
