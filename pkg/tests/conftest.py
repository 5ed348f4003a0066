import random
from fractions import Fraction

import pytest

from kzrat.scalars import ParamScalar
from kzrat.solutions import build_basis
from kzrat.system import build_s3_system, symbolic_system


@pytest.fixture(scope="session")
def sym_system():
    return symbolic_system()


@pytest.fixture(scope="session")
def sym_basis(sym_system):
    # One shared build keeps the suite fast; everything downstream is immutable.
    return build_basis(sym_system, k_max=12)


@pytest.fixture(scope="session")
def num_system():
    return build_s3_system(
        ParamScalar.from_rational(0), ParamScalar.from_rational(1)
    )


@pytest.fixture(scope="session")
def num_basis(num_system):
    return build_basis(num_system, k_max=6)


@pytest.fixture()
def rng():
    return random.Random(20260809)


def random_fraction(rng, span=9, nonzero=False):
    while True:
        value = Fraction(rng.randint(-span, span), rng.randint(1, span))
        if value != 0 or not nonzero:
            return value
