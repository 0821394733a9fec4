"""
Perfect matchings and the doubling construction that turns a subcubic graph
of girth >= 4 with degree-2 vertices into a cubic graph of girth >= 4.
"""

import random
from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional, Tuple

import networkx as nx

from errors import NotPerfectMatching, PreconditionViolated
from multigraph import Edge, Multigraph, check_perfect_matching, degrees, girth, is_connected, parallel_classes


@dataclass(frozen=True)
class Matching:
    edges: FrozenSet[int]

    def __contains__(self, edge_id: int) -> bool:
        return edge_id in self.edges

    def __len__(self) -> int:
        return len(self.edges)

    def covers(self, g: Multigraph) -> Dict[int, int]:
        """vertex -> number of matching edges at it"""
        count = {v: 0 for v in range(g.n)}
        for edge_id in self.edges:
            e = g.edge(edge_id)
            count[e.u] += 1
            count[e.v] += 1
        return count


def is_matching(g: Multigraph, m: Matching) -> bool:
    return all(edge_id in g.edge_by_id for edge_id in m.edges) and all(c <= 1 for c in m.covers(g).values())


def check_matching(g: Multigraph, m: Matching) -> Matching:
    """
    Raises:
        NotPerfectMatching: naming the unknown edge or the vertex not covered exactly once
    """
    check_perfect_matching(g, m.edges)
    return m


def is_perfect(g: Multigraph, m: Matching) -> bool:
    try:
        check_matching(g, m)
    except NotPerfectMatching:
        return False
    return True


def perfect_matching(g: Multigraph, rng: Optional[random.Random] = None) -> Optional[Matching]:
    """
    A perfect matching if one exists, else None.
    Blossom-based maximum-cardinality matching on the underlying simple graph;
    `rng` shuffles vertex order and picks a random edge from each parallel class.
    """
    if g.n % 2 == 1:
        return None

    classes = parallel_classes(g)
    order = list(range(g.n))
    pairs = sorted(classes)
    if rng is not None:
        rng.shuffle(order)
        rng.shuffle(pairs)

    simple = nx.Graph()
    simple.add_nodes_from(order)
    simple.add_edges_from(pairs)
    mate = nx.max_weight_matching(simple, maxcardinality=True)
    if 2 * len(mate) != g.n:
        return None

    chosen = set()
    for a, b in mate:
        ids = classes[(a, b) if a <= b else (b, a)]
        chosen.add(rng.choice(ids) if rng is not None else ids[0])
    return check_matching(g, Matching(frozenset(chosen)))


def cubic_double(g: Multigraph) -> Tuple[Multigraph, Dict[int, int]]:
    """
    Two disjoint copies of g with every degree-2 vertex joined to its twin.

    Returns:
        the cubic double and the embedding g-edge-id -> double-edge-id
        (copy one keeps g's identities)

    Raises:
        PreconditionViolated: naming the first failing condition
    """
    degs = degrees(g)
    if not is_connected(g):
        raise PreconditionViolated("graph is not connected")
    if min(degs, default=0) < 2:
        raise PreconditionViolated("minimum degree is below 2")
    if max(degs, default=0) > 3:
        raise PreconditionViolated("maximum degree is above 3")
    if girth(g) < 4:
        raise PreconditionViolated("girth is below 4")
    twins = [v for v, d in enumerate(degs) if d == 2]
    if not twins:
        raise PreconditionViolated("no degree-2 vertex to double")

    offset = g.next_edge_id()
    copy_two = [Edge(offset + i, e.u + g.n, e.v + g.n) for i, e in enumerate(g.edges)]
    rung_base = offset + len(copy_two)
    rungs = [Edge(rung_base + i, v, v + g.n) for i, v in enumerate(twins)]
    double = Multigraph(2 * g.n, tuple(g.edges) + tuple(copy_two) + tuple(rungs))
    return double, {e.id: e.id for e in g.edges}


__all__ = [
    'Matching',
    'is_matching',
    'check_matching',
    'is_perfect',
    'perfect_matching',
    'cubic_double',
]
