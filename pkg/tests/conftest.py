import os
import random

import pytest

# Randomized batteries are reproducible: set PREFIXCODE_SEED to vary them.
SEED = int(os.environ.get("PREFIXCODE_SEED", "271828"))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)
