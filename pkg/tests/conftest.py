"""Shared small algebras used across test modules."""

import pytest

from liecas.liealg import build_algebra


@pytest.fixture(scope="session")
def sl2():
    return build_algebra(3, {(1, 2): {3: 1}, (1, 3): {1: -2}, (2, 3): {2: 2}})


@pytest.fixture(scope="session")
def so3():
    return build_algebra(3, {(1, 2): {3: 1}, (1, 3): {2: -1}, (2, 3): {1: 1}})


@pytest.fixture(scope="session")
def aff1():
    # aff(R): [e1, e2] = e2
    return build_algebra(2, {(1, 2): {2: 1}})


@pytest.fixture(scope="session")
def abelian2():
    return build_algebra(2, {})
