import pytest

from properties import build_suite

SUITE = build_suite(200)


@pytest.mark.parametrize("name", list(SUITE))
def test_property(name):
    SUITE[name]()
