import pytest

from helpers import layered_tree


@pytest.fixture
def layered():
    return layered_tree()
