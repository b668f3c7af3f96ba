import random
from fractions import Fraction

import pytest

from fqcount import QPoly


def rand_qpoly(rng: random.Random, max_exp=8, max_terms=4, rational=True) -> QPoly:
    terms = {}
    for _ in range(rng.randrange(1, max_terms + 1)):
        if rational and rng.random() < 0.4:
            c = Fraction(rng.randrange(-4, 5), rng.randrange(1, 4))
        else:
            c = rng.randrange(-4, 5)
        terms[rng.randrange(max_exp + 1)] = c
    return QPoly(terms)


@pytest.fixture
def rng():
    return random.Random(20260809)
