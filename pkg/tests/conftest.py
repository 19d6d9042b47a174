import random

import pytest

from rookdist.validation import DEFAULT_SEED


@pytest.fixture
def rng():
    return random.Random(DEFAULT_SEED)
