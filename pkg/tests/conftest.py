import pytest

from helpers import make_calibrated, make_toy


@pytest.fixture
def toy():
    return make_toy()


@pytest.fixture
def calibrated():
    return make_calibrated()
