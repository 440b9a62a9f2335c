"""Shared fixtures: small building sets and their lattices."""

import pytest

from ornalat.building import digraphical, graphical, left_segment
from ornalat.lattice import enumerate_lattice
from ornalat.universe import Digraph, Graph


@pytest.fixture
def tamari3():
    return left_segment(3)


@pytest.fixture
def tamari3_lattice(tamari3):
    return enumerate_lattice(tamari3)


@pytest.fixture
def k3():
    return graphical(Graph.complete(3))


@pytest.fixture
def k3_lattice(k3):
    return enumerate_lattice(k3)


@pytest.fixture
def path3():
    return Digraph.path(3)


@pytest.fixture
def natural3():
    return digraphical(Digraph.complete_dag(3))


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    for name in ("ORNALAT_CAP", "ORNALAT_THREADS", "DEBUG_MODE"):
        monkeypatch.delenv(name, raising=False)
