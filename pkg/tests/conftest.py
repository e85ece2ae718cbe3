import random

import pytest

from mucrit.fp import FpSet


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def random_subset(rng, p, size, avoid=()):
    pool = [x for x in range(p) if x not in avoid]
    return FpSet(p, rng.sample(pool, size))
