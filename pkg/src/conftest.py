"""Shared fixtures: the fork, A_2 and loop quivers and the two base instances over F_2."""

from pathlib import Path

import pytest

from base import DualNumbers, FinVect, instance
from quiver import Quiver, fork_quiver, linear_quiver, loop_quiver

DATA_DIR = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture
def fork() -> Quiver:
    return fork_quiver()


@pytest.fixture
def a2() -> Quiver:
    return linear_quiver(2)


@pytest.fixture
def loop() -> Quiver:
    return loop_quiver()


@pytest.fixture
def vect() -> FinVect:
    return instance("finvect", 2)


@pytest.fixture
def dual() -> DualNumbers:
    return instance("dual", 2)


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR
