import pytest
from hypothesis import settings

from kummerlaw.sampling import SampleStream

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")


@pytest.fixture
def stream():
    return SampleStream(20240811)
