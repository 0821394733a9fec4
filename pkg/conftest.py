"""
Shared fixtures: the named graphs every test module talks about
"""

import os

import networkx as nx
import pytest

from multigraph import Multigraph, build
from reduce import H1, H2

RUN_SLOW = os.getenv('CCI_SLOW') == '1'


def pytest_collection_modifyitems(config, items):
    if RUN_SLOW:
        return
    skip = pytest.mark.skip(reason="exhaustive run, set CCI_SLOW=1")
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip)


def cycle_graph(n: int) -> Multigraph:
    """C_n with edge i joining i and i+1; n = 2 gives a digon"""
    return build(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Multigraph:
    """Path on n vertices"""
    return build(n, [(i, i + 1) for i in range(n - 1)])


@pytest.fixture
def petersen():
    return Multigraph.from_networkx(nx.petersen_graph())


@pytest.fixture
def k33():
    return Multigraph.from_networkx(nx.complete_bipartite_graph(3, 3))


@pytest.fixture
def q3():
    return Multigraph.from_networkx(nx.hypercube_graph(3))


@pytest.fixture
def heawood():
    return Multigraph.from_networkx(nx.heawood_graph())


@pytest.fixture
def k4():
    return Multigraph.from_networkx(nx.complete_graph(4))


@pytest.fixture
def h1():
    return H1


@pytest.fixture
def h2():
    return H2


@pytest.fixture
def k23():
    """K_2^3: two vertices, three parallel edges"""
    return build(2, [(0, 1), (0, 1), (0, 1)])


@pytest.fixture
def digon_prism():
    """
    A parallel pair 0=1 whose outside neighbours 2 and 3 close off a K4:
    contracting the pair gives K4 back
    """
    return build(6, [(0, 1), (0, 1), (0, 2), (1, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)])


@pytest.fixture
def dodecahedron():
    return Multigraph.from_networkx(nx.dodecahedral_graph())


@pytest.fixture
def desargues():
    return Multigraph.from_networkx(nx.desargues_graph())
