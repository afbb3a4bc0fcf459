import json

import mpmath
import pytest

from heckedim.certify import certify_interval
from heckedim.hyperbolic import conjugacy_classes
from heckedim.reference import certified_reference, reference_rows, stem_to_path


@pytest.fixture
def reference_table():
    return reference_rows()


@pytest.fixture
def raw_reference_table():
    return json.loads(stem_to_path["dimension_table"].read_text())


@pytest.fixture
def published_interval():
    return certified_reference(3)


@pytest.fixture
def mp():
    with mpmath.workdps(30):
        yield mpmath


@pytest.fixture
def mp_periodic_zeta(mp):
    """Li_s(e^{2 pi i a/q}) from mpmath's Hurwitz zeta, q^-s sum_r e^{2 pi i a r/q} zeta(s, r/q)."""

    def evaluate(s, a, q):
        total = mp.mpc(0)
        for r in range(1, q + 1):
            total += mp.expjpi(2 * mp.mpf(a) * r / q) * mp.zeta(s, mp.mpf(r) / q)
        return complex(total * mp.power(q, -s))

    return evaluate


@pytest.fixture(scope="session")
def classes_w20():
    # every class with word length <= 3 and letters |n| <= 50 at w = 20
    return conjugacy_classes(3, 50, 20.0)


@pytest.fixture(scope="session")
def certified_three():
    return certify_interval(3.0)
