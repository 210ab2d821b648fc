import time

import pytest

from hsk.hadamard import build_system, system_from_ac
from hsk.identities import verify_identity_suite
from hsk.torus import torus_zero_search

ELAPSED: dict[str, float] = {}


def _timed(key, fn):
    start = time.perf_counter()
    result = fn()
    ELAPSED[key] = time.perf_counter() - start
    return result


@pytest.fixture(scope="session")
def elapsed():
    return ELAPSED


@pytest.fixture(scope="session")
def identity_report():
    return _timed("identities", verify_identity_suite)


@pytest.fixture(scope="session")
def search_a1c3():
    return _timed("search_a1c3",
                  lambda: torus_zero_search(system_from_ac(1, 3),
                                            grid_per_angle=64))


@pytest.fixture(scope="session")
def search_a2c1():
    return _timed("search_a2c1",
                  lambda: torus_zero_search(system_from_ac(2, 1),
                                            grid_per_angle=64))


@pytest.fixture(scope="session")
def search_a1c1():
    return _timed("search_a1c1",
                  lambda: torus_zero_search(system_from_ac(1, 1),
                                            grid_per_angle=64))


@pytest.fixture(scope="session")
def search_second_spectrum():
    system = build_system({"k1": 2, "k2": 1, "r": -2, "s": 0, "b2": 8})
    return _timed("search_second_spectrum",
                  lambda: torus_zero_search(system, grid_per_angle=64))
