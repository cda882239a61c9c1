from fractions import Fraction

import pytest

from leonard_kit.sl2 import KrawtchoukParameters, krawtchouk_pair, three_mutually_adjacent

STANDARD_WITNESSES = ((1, 0), (0, 1), (1, 1), (1, -1))


@pytest.fixture(scope="session")
def kraw():
    """Cached Krawtchouk pair factory keyed by (d, p)."""
    cache = {}

    def make(d, p):
        key = (d, Fraction(p))
        if key not in cache:
            cache[key] = krawtchouk_pair(KrawtchoukParameters(d, Fraction(p)))
        return cache[key]

    return make


@pytest.fixture(scope="session")
def standard_triple():
    """Cached mutually adjacent triple on the standard witness vectors."""
    cache = {}

    def make(d):
        if d not in cache:
            cache[d] = three_mutually_adjacent(d, *STANDARD_WITNESSES)
        return cache[d]

    return make
