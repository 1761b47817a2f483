import random

import pytest

from turaevgenus import corpus


@pytest.fixture
def rng():
    return random.Random(20240815)


@pytest.fixture(scope="session")
def named():
    return corpus.named_diagrams()
