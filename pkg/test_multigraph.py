"""
Tests for the multigraph core: identities, structure queries, line graphs
and the cycle decomposition of G - M
"""

import random

import networkx as nx
import pytest

from conftest import cycle_graph, path_graph
from errors import BadVertex, DuplicateEdge, LoopRejected, NotCubic, NotPerfectMatching
from multigraph import (
    INFINITE,
    Edge,
    Multigraph,
    bridges,
    build,
    cycle_decomposition,
    degrees,
    edge_subgraph,
    girth,
    is_connected,
    is_cubic,
    line_graph,
    max_degree,
    parallel_classes,
)

PETERSEN_SPOKES = frozenset({2, 4, 6, 8, 9})


def random_multigraph(rng: random.Random, max_vertices: int = 8, max_edges: int = 12) -> Multigraph:
    """Loopless, maximum degree 3, not necessarily connected"""
    n = rng.randint(2, max_vertices)
    degree = [0] * n
    pairs = []
    for _ in range(rng.randint(0, max_edges)):
        u, v = rng.sample(range(n), 2)
        if degree[u] < 3 and degree[v] < 3:
            degree[u] += 1
            degree[v] += 1
            pairs.append((u, v))
    return build(n, pairs)


# =============================================================================
# CONSTRUCTION
# =============================================================================

def test_build_numbers_edges_in_input_order():
    g = build(3, [(0, 1), (1, 2), (0, 1)])
    assert g.edges == (Edge(0, 0, 1), Edge(1, 1, 2), Edge(2, 0, 1))
    assert g.m == 3
    assert g.next_edge_id() == 3


def test_loops_are_rejected():
    with pytest.raises(LoopRejected):
        build(2, [(0, 1), (1, 1)])


def test_endpoints_must_exist():
    with pytest.raises(BadVertex):
        build(2, [(0, 2)])


def test_edge_identities_are_unique():
    with pytest.raises(DuplicateEdge):
        Multigraph(2, (Edge(0, 0, 1), Edge(0, 0, 1)))


def test_from_networkx_uses_sorted_edge_order(k4):
    assert k4.n == 4
    assert k4.edge(0) == Edge(0, 0, 1)
    assert k4.edge(5) == Edge(5, 2, 3)


def test_networkx_round_trip_keeps_parallel_edges(k23):
    back = Multigraph.from_networkx(k23.to_networkx())
    assert back == k23


def test_edge_subgraph_keeps_identities_and_compacts_vertices(petersen):
    sub = edge_subgraph(petersen, [0, 1])
    assert sub.n == 3
    assert sub.edges == (Edge(0, 0, 1), Edge(1, 0, 2))


# =============================================================================
# STRUCTURE
# =============================================================================

def test_degree_queries(petersen, k23):
    assert is_cubic(petersen)
    assert max_degree(path_graph(4)) == 2
    assert degrees(k23) == [3, 3]
    assert not is_cubic(cycle_graph(5))


def test_connectivity():
    assert is_connected(cycle_graph(4))
    assert not is_connected(build(4, [(0, 1), (2, 3)]))


def test_parallel_classes(k23):
    assert parallel_classes(k23) == {(0, 1): (0, 1, 2)}


@pytest.mark.parametrize("name, expected", [
    ("petersen", 5),
    ("k33", 4),
    ("q3", 4),
    ("heawood", 6),
    ("k4", 3),
    ("k23", 2),
])
def test_girth_of_named_graphs(request, name, expected):
    assert girth(request.getfixturevalue(name)) == expected


def test_girth_of_forest_is_infinite():
    assert girth(path_graph(5)) == INFINITE


def test_bridges():
    assert bridges(path_graph(4)) == {0, 1, 2}
    # a parallel pair never counts, the pendant edge does
    assert bridges(build(3, [(0, 1), (0, 1), (1, 2)])) == {2}


def test_cubic_graphs_without_bridges(petersen, k23):
    assert bridges(petersen) == frozenset()
    assert bridges(k23) == frozenset()


def test_degrees_sum_to_twice_the_edges():
    rng = random.Random(11)
    for _ in range(300):
        g = random_multigraph(rng)
        assert sum(degrees(g)) == 2 * g.m


def test_bridges_match_edge_removal():
    """A bridge is exactly an edge whose removal adds a component"""
    rng = random.Random(12)
    for _ in range(300):
        g = random_multigraph(rng)
        components = nx.number_connected_components(g.to_networkx())
        expected = set()
        for e in g.edges:
            rest = Multigraph(g.n, tuple(x for x in g.edges if x.id != e.id))
            if nx.number_connected_components(rest.to_networkx()) > components:
                expected.add(e.id)
        assert bridges(g) == expected


# =============================================================================
# LINE GRAPH
# =============================================================================

def test_parallel_edges_are_adjacent_in_line_graph(k23):
    line = line_graph(k23)
    assert line.adjacency[0] == {1, 2}
    assert line.to_networkx().number_of_edges() == 3


def test_line_graph_of_cubic_graph_is_four_regular(petersen):
    line = line_graph(petersen)
    assert line.nodes == petersen.edge_ids
    assert all(line.degree(x) == 4 for x in line.nodes)


def test_line_graph_degrees_on_multigraphs():
    rng = random.Random(13)
    for _ in range(300):
        g = random_multigraph(rng)
        line = line_graph(g)
        d = degrees(g)
        classes = parallel_classes(g)
        assert len(line.nodes) == g.m
        for e in g.edges:
            # a parallel partner sits at both ends but is one neighbour
            partners = len(classes[e.pair()]) - 1
            assert line.degree(e.id) == d[e.u] + d[e.v] - 2 - partners
            if partners == 0:
                assert line.degree(e.id) == d[e.u] + d[e.v] - 2


# =============================================================================
# CYCLE DECOMPOSITION
# =============================================================================

def test_petersen_minus_spokes_is_two_pentagons(petersen):
    dec = cycle_decomposition(petersen, PETERSEN_SPOKES)
    assert [c.length for c in dec.cycles] == [5, 5]
    assert not any(dec.is_chord(e) for e in PETERSEN_SPOKES)
    assert {dec.cycle_of_vertex[v] for v in range(5)} == {0}
    assert {dec.cycle_of_vertex[v] for v in range(5, 10)} == {1}


def test_cycles_walk_their_vertices(petersen):
    dec = cycle_decomposition(petersen, PETERSEN_SPOKES)
    for cycle in dec.cycles:
        for i, edge_id in enumerate(cycle.edges):
            edge = petersen.edge(edge_id)
            ends = {cycle.vertices[i], cycle.vertices[(i + 1) % cycle.length]}
            assert {edge.u, edge.v} == ends


def test_k33_matching_edges_are_chords(k33):
    # (0,3), (1,4), (2,5)
    dec = cycle_decomposition(k33, [0, 4, 8])
    assert len(dec.cycles) == 1
    assert dec.cycles[0].length == 6
    assert all(dec.is_chord(e) for e in (0, 4, 8))


def test_decomposition_needs_cubic_graph():
    with pytest.raises(NotCubic):
        cycle_decomposition(cycle_graph(4), [0, 2])


def test_decomposition_needs_perfect_matching(petersen):
    with pytest.raises(NotPerfectMatching):
        cycle_decomposition(petersen, [0])
    with pytest.raises(NotPerfectMatching):
        cycle_decomposition(petersen, [0, 1, 2, 4, 6])
