import pytest

from helpers.precision import make_context

@pytest.fixture
def ctx():
    return make_context()
