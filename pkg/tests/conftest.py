import pytest

from ellsuper import AspectRatio


@pytest.fixture
def infinity():
    return AspectRatio.infinite()
