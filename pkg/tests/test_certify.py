"""
Tests for the certified interval bounds on delta(w)
"""

from types import SimpleNamespace

import numpy as np
import pytest

from heckedim import certify
from heckedim.certify import (
    binomial_weighted_series,
    binomial_weighted_series_partial,
    certify_interval,
    coefficient_bound,
    e1_term,
    e2_direct,
    e2_term,
    elementary_series,
    elementary_series_partial,
    error_bound,
    f_value,
)
from heckedim.dimension import estimate_dimension
from heckedim.errors import CertificationError, DomainError, PriorError


def test_f_value_changes_sign_across_published_interval():
    assert f_value(0.75065, 3.0) < -0.0066
    assert f_value(0.75322, 3.0) > 0.0066


def test_f_value_is_increasing():
    grid = np.linspace(0.6, 0.9, 31)
    values = [f_value(delta, 3.0) for delta in grid]
    assert all(a < b for a, b in zip(values, values[1:]))


def test_f_value_domain():
    with pytest.raises(DomainError):
        f_value(0.75, 2.5)
    with pytest.raises(DomainError):
        f_value(0.5, 3.0)


def test_error_bound_at_three():
    assert 0.006 < error_bound(3.0, 0.7) < 0.0066
    with pytest.raises(DomainError):
        error_bound(3.0, 1.0)
    with pytest.raises(DomainError):
        error_bound(2.9, 0.7)


def test_error_bound_decreases():
    bounds = [error_bound(w, 0.55) for w in (3.0, 4.0, 6.0, 10.0, 20.0)]
    assert all(a > b for a, b in zip(bounds, bounds[1:]))
    # a larger prior gives a smaller bound
    assert error_bound(3.0, 0.75) < error_bound(3.0, 0.7)


def test_e1_term(mp):
    w, delta = 3.0, 0.7
    x = mp.mpf(3) / (2 * w * w)
    expected = (
        729
        * mp.zeta(3)
        * mp.zeta(4 + 2 * delta)
        * (5 - 3 * x**2)
        / (16 * mp.power(w, 9 + 2 * delta) * mp.sqrt(mp.pi) * (1 - x**2) ** 2)
    )
    assert e1_term(w, delta) == pytest.approx(float(expected), rel=1e-12)


@pytest.mark.parametrize("w", [3.0, 5.0, 10.0])
@pytest.mark.parametrize("delta", [0.55, 0.7, 0.9])
def test_e2_direct_below_carried_constant(w, delta):
    assert e2_direct(w, delta) < 3521 / w ** (11 + 2 * delta)
    assert e2_term(w, delta) > 0


@pytest.mark.parametrize("x", [0.1, 0.3])
def test_series_closed_forms(x):
    assert elementary_series(x) == pytest.approx(elementary_series_partial(x, 200), rel=1e-12)
    assert binomial_weighted_series(x) == pytest.approx(
        binomial_weighted_series_partial(x, 200), rel=1e-12
    )


def test_binomial_series_constant():
    for x in np.linspace(0.01, 1 / 6, 50):
        assert binomial_weighted_series(x) < 113 * x**4
    with pytest.raises(DomainError):
        elementary_series(1.0)


def test_coefficient_bound():
    assert coefficient_bound(0, 3.0) == pytest.approx(1.01728, rel=1e-5)
    ratio = coefficient_bound(3, 3.0) / coefficient_bound(2, 3.0)
    assert ratio == pytest.approx(4 / 3 * 0.5)
    with pytest.raises(DomainError):
        coefficient_bound(-1, 3.0)


def test_certified_interval_at_three(certified_three, published_interval):
    assert certified_three.lower >= 0.7506
    assert certified_three.upper <= 0.7533
    assert certified_three.lower < certified_three.delta_estimate < certified_three.upper
    assert certified_three.exceeds_three_quarters
    assert certified_three.delta_prior >= 0.70
    assert certified_three.reference == published_interval


def test_fixed_point_residual_within_bound(certified_three):
    delta = certified_three.delta_estimate
    assert abs(f_value(delta, 3.0)) <= certified_three.epsilon_used
    for w in (5.0, 10.0):
        delta = estimate_dimension(w).delta
        assert abs(f_value(delta, w)) <= error_bound(w, max(0.51, delta - 0.05))


def test_certified_interval_at_ten():
    report = certify_interval(10.0, delta_prior=0.55)
    assert report.lower < report.delta_estimate < report.upper
    assert report.delta_estimate == pytest.approx(0.576606582728845, abs=1e-11)
    # printed as 0.5766067
    assert abs(round(report.delta_estimate, 7) - 0.5766067) <= 1e-7 + 1e-12
    assert report.reference is None
    assert not report.exceeds_three_quarters


def test_estimate_outside_interval_raises(monkeypatch):
    def misplaced(w, k=None):
        return SimpleNamespace(delta=0.9)

    monkeypatch.setattr(certify, "estimate_dimension", misplaced)
    with pytest.raises(CertificationError, match="outside the certified interval"):
        certify_interval(3.0, delta_prior=0.7)


def test_widths_shrink(certified_three):
    widths = [certified_three.width] + [
        certify_interval(w).width for w in (5.0, 10.0)
    ]
    assert widths[0] > widths[1] > widths[2]


def test_prior_above_lower_bound():
    with pytest.raises(PriorError):
        certify_interval(3.0, delta_prior=0.76, k=15)


def test_certify_domain():
    with pytest.raises(DomainError):
        certify_interval(2.5)
