from pathlib import Path

import pytest

from neardomain.fields import field_of_order
from neardomain.phi import standard_phi_system

DATA = Path(__file__).parent / "data"


@pytest.fixture
def data():
    return DATA


@pytest.fixture(params=[3, 4, 5])
def small_system(request):
    return standard_phi_system(field_of_order(request.param))


def gf(q):
    return field_of_order(q)
