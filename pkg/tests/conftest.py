from itertools import combinations

import pytest
from hypothesis import settings

from fabal.modcat import BasicModule, NakayamaPresentation, indecomposables, linear

settings.register_profile("default", deadline=None)
settings.load_profile("default")


def all_modules(pres, include_empty=False):
    ind = indecomposables(pres)
    start = 0 if include_empty else 1
    for r in range(start, len(ind) + 1):
        for sub in combinations(ind, r):
            yield BasicModule(pres.n, tuple(sub), pres.valleys)


def valley_sets(n_max):
    for n in range(3, n_max + 1):
        for t in range(1, n - 1):
            for vs in combinations(range(2, n), t):
                yield NakayamaPresentation(n, vs)


def mod(n, *summands, valleys=()):
    return BasicModule.of(n, summands, valleys)


@pytest.fixture
def lam3():
    return BasicModule.of(3, [(1, 3), (2, 3), (3, 3)])


@pytest.fixture
def pres_linear():
    return linear
