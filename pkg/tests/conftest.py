from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from qexterior.fields import FieldDescriptor, make_field

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIELD_DESCRIPTORS = [
    FieldDescriptor(0),
    FieldDescriptor(2),
    FieldDescriptor(3),
    FieldDescriptor(0, Fraction(2)),
    FieldDescriptor(0, Fraction(-3, 5)),
]


@pytest.fixture(params=FIELD_DESCRIPTORS, ids=str)
def field(request):
    return make_field(request.param)


@pytest.fixture
def Qq():
    return make_field(0)


@pytest.fixture
def F2q():
    return make_field(2)
