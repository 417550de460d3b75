import hypothesis
import pytest

from k3chambers import double_cover_example, quartic_example

hypothesis.settings.register_profile("exact", deadline=None)
hypothesis.settings.load_profile("exact")


@pytest.fixture(scope="session")
def quartic():
    return quartic_example()


@pytest.fixture(scope="session")
def double_cover():
    return double_cover_example()
