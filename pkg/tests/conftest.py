import random

import pytest

from ncwitt import Alphabet, FreePoly


@pytest.fixture
def ab():
    return Alphabet(["X", "Y"])


@pytest.fixture
def X(ab):
    return FreePoly.generator(ab, "X")


@pytest.fixture
def Y(ab):
    return FreePoly.generator(ab, "Y")


@pytest.fixture
def rng():
    return random.Random(12345)
