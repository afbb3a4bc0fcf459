"""
Tests for the special functions module
"""

import cmath
import math

import numpy as np
import pytest

from heckedim.errors import ConvergenceError, DomainError
from heckedim.specfun import (
    STIELTJES,
    StieltjesTable,
    complex_binomial,
    laurent_coefficient_fit,
    periodic_zeta,
    periodic_zeta_pair,
    periodic_zeta_tail,
    riemann_zeta,
    shifted_zeta,
    stieltjes_constants,
    validate_stieltjes_constants,
    zeta_regular_part,
)


@pytest.mark.parametrize(
    "s, expected",
    [
        (2, math.pi**2 / 6),
        (4, math.pi**4 / 90),
        (6, math.pi**6 / 945),
    ],
)
def test_zeta_even_values(s, expected):
    assert riemann_zeta(s).real == pytest.approx(expected, rel=1e-12)


def test_zeta_against_mpmath(mp):
    for s in (3, 1.05, 1.5 + 7j, 2.5 + 1j, 12.25):
        assert riemann_zeta(s) == pytest.approx(complex(mp.zeta(s)), rel=1e-13)


def test_zeta_real_and_decreasing():
    grid = np.linspace(1.05, 6.0, 40)
    values = riemann_zeta(grid)
    assert values.shape == grid.shape
    assert np.all(np.abs(values.imag) <= 1e-15 * values.real)
    assert np.all(values.real > 1)
    assert np.all(np.diff(values.real) < 0)


def test_zeta_domain():
    with pytest.raises(DomainError):
        riemann_zeta(1.0)
    with pytest.raises(DomainError):
        riemann_zeta(np.array([2.0, 0.5 + 3j]))


def test_shifted_zeta(mp):
    assert shifted_zeta(2.5, 1) == riemann_zeta(2.5)
    assert shifted_zeta(3, 11) == pytest.approx(complex(mp.zeta(3, 11)), rel=1e-13)
    # sum over odd integers
    assert shifted_zeta(2, 1, 2) == pytest.approx(math.pi**2 / 8, rel=1e-13)
    with pytest.raises(DomainError):
        shifted_zeta(2, 0.5)


def test_periodic_zeta_untwisted():
    assert periodic_zeta(2, 0.0) == pytest.approx(math.pi**2 / 6, rel=1e-12)


def test_periodic_zeta_alternating():
    assert periodic_zeta(2, 0.5) == pytest.approx(-(math.pi**2) / 12, rel=1e-10)


@pytest.mark.parametrize("s, a, q", [(3, 1, 3), (1.02, 1, 4), (2.3 + 0.5j, 3, 8), (1.6, 5, 7)])
def test_periodic_zeta_rational_twists(mp_periodic_zeta, s, a, q):
    assert periodic_zeta(s, a / q) == pytest.approx(mp_periodic_zeta(s, a, q), rel=1e-10)


def test_periodic_zeta_irrational_twist():
    theta, s = 0.1234567, 3.0
    n = np.arange(1, 200_001, dtype=float)
    terms = np.exp(2j * np.pi * theta * n) * n**-s
    partial = complex(math.fsum(terms.real), math.fsum(terms.imag))
    # the omitted tail is below 200000^-2 / 2
    assert abs(periodic_zeta(s, theta) - partial) < 1e-10


@pytest.mark.parametrize("theta", [0.1, 0.25, 0.4])
def test_periodic_zeta_conjugate_twists(theta):
    for s in (1.3, 2.0, 4.5):
        plus, minus = periodic_zeta_pair(s, theta)
        assert plus == pytest.approx(periodic_zeta(s, 1 - theta).conjugate(), rel=1e-12)
        assert minus == pytest.approx(plus.conjugate(), rel=1e-12)


def test_periodic_zeta_tail():
    s, theta, cutoff = 2.5, 0.25, 50
    head = sum(cmath.exp(2j * math.pi * theta * n) * n**-s for n in range(1, cutoff + 1))
    assert abs(periodic_zeta_tail(s, theta, cutoff) - (periodic_zeta(s, theta) - head)) < 1e-12
    assert periodic_zeta_tail(s, theta, 0) == pytest.approx(periodic_zeta(s, theta), rel=1e-14)


def test_periodic_zeta_domain():
    with pytest.raises(DomainError):
        periodic_zeta(2, 1.0)
    with pytest.raises(DomainError):
        periodic_zeta(1.0, 0.5)


def test_complex_binomial_examples():
    assert complex_binomial(0.3 + 4j, 0) == 1
    assert complex_binomial(3, 2) == 3
    assert complex_binomial(1 + 1j, 2) == pytest.approx((-1 + 1j) / 2, rel=1e-15)
    with pytest.raises(DomainError):
        complex_binomial(2, -1)


def test_complex_binomial_pascal():
    rng = np.random.default_rng(7)
    for r in rng.normal(size=8) * 4 + 1j * rng.normal(size=8) * 4:
        for k in range(1, 11):
            expected = complex_binomial(r - 1, k) + complex_binomial(r - 1, k - 1)
            assert complex_binomial(r, k) == pytest.approx(expected, rel=1e-12)


def test_stieltjes_constants(mp):
    table = stieltjes_constants()
    assert round(table.gamma[0], 10) == 0.5772156649
    for n, value in enumerate(table.gamma):
        assert value == pytest.approx(float(mp.stieltjes(n)), abs=1e-12)


def test_stieltjes_truncation_order():
    table = stieltjes_constants()
    x = 0.05
    series = 1 / x + sum(table.laurent_coefficient(n) * x**n for n in range(5))
    assert abs(series - riemann_zeta(1 + x).real) <= 10 * x**5


def test_stieltjes_validation_rejects_wrong_literals():
    validate_stieltjes_constants()
    wrong = StieltjesTable(gamma=(STIELTJES[0] + 1e-3,) + STIELTJES[1:])
    with pytest.raises(ConvergenceError):
        validate_stieltjes_constants(wrong)


def test_laurent_coefficient_fit():
    fit = laurent_coefficient_fit()
    assert len(fit) == 5
    for n, gamma in enumerate(STIELTJES):
        expected = (-1) ** n * gamma / math.factorial(n)
        assert fit[n] == pytest.approx(expected, rel=1e-8, abs=1e-13)


def test_laurent_coefficient_fit_is_stable_in_radius():
    np.testing.assert_allclose(
        laurent_coefficient_fit(radius=0.5), laurent_coefficient_fit(radius=1.0), atol=1e-12
    )
    with pytest.raises(DomainError):
        laurent_coefficient_fit(order=8, points=8)


def test_zeta_regular_part(mp):
    assert zeta_regular_part(0.0) == pytest.approx(STIELTJES[0], abs=1e-14)
    assert zeta_regular_part(-1.0) == pytest.approx(0.5, abs=1e-14)
    assert zeta_regular_part(0.3) == pytest.approx(riemann_zeta(1.3) - 1 / 0.3, rel=1e-13)
    for x in (1e-9, -0.5, 0.5 + 0.5j, -0.7 - 0.6j):
        expected = complex(mp.zeta(1 + mp.mpc(x)) - 1 / mp.mpc(x))
        assert zeta_regular_part(x) == pytest.approx(expected, rel=1e-13)
    values = zeta_regular_part(np.array([0.2 + 0.9j, 0.2 - 0.9j]))
    assert values[0] == pytest.approx(values[1].conjugate(), rel=1e-14)
