"""
Multigraph core: loopless graphs with parallel edges and stable edge identities
Every other module keys its colorings by the edge identities defined here
"""

import math
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Sequence, Tuple

import networkx as nx

from errors import BadVertex, DuplicateEdge, LoopRejected, NotCubic, NotPerfectMatching

# Girth of a forest
INFINITE = math.inf


class Edge(NamedTuple):
    id: int
    u: int
    v: int

    def other(self, x: int) -> int:
        return self.v if x == self.u else self.u

    def pair(self) -> Tuple[int, int]:
        return (self.u, self.v) if self.u <= self.v else (self.v, self.u)


@dataclass(frozen=True)
class Multigraph:
    """Vertices 0..n-1 plus a tuple of identified edges"""

    n: int
    edges: Tuple[Edge, ...]

    def __post_init__(self):
        seen = set()
        for e in self.edges:
            if e.u == e.v:
                raise LoopRejected(f"edge {e.id} is a loop at vertex {e.u}")
            for x in (e.u, e.v):
                if not 0 <= x < self.n:
                    raise BadVertex(f"edge {e.id} uses vertex {x}, graph has {self.n} vertices")
            if e.id in seen:
                raise DuplicateEdge(f"duplicate edge identity {e.id}")
            seen.add(e.id)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> 'Multigraph':
        """Integer-relabel a networkx graph or multigraph (ids follow sorted edge order)"""
        try:
            order = sorted(graph.nodes)
        except TypeError:
            order = list(graph.nodes)
        index = {v: i for i, v in enumerate(order)}
        pairs = sorted(
            tuple(sorted((index[a], index[b])))
            for a, b in graph.edges()
        )
        return build(len(order), pairs)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_by_id(self) -> Dict[int, Edge]:
        return {e.id: e for e in self.edges}

    @cached_property
    def incidence(self) -> Tuple[Tuple[int, ...], ...]:
        slots: List[List[int]] = [[] for _ in range(self.n)]
        for e in self.edges:
            slots[e.u].append(e.id)
            slots[e.v].append(e.id)
        return tuple(tuple(s) for s in slots)

    @property
    def edge_ids(self) -> Tuple[int, ...]:
        return tuple(e.id for e in self.edges)

    def edge(self, edge_id: int) -> Edge:
        return self.edge_by_id[edge_id]

    def incident(self, v: int) -> Tuple[int, ...]:
        return self.incidence[v]

    def next_edge_id(self) -> int:
        return max(self.edge_ids, default=-1) + 1

    def simple_graph(self) -> nx.Graph:
        """Underlying simple graph; each pair carries the sorted ids of its parallel class"""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        for pair, ids in parallel_classes(self).items():
            graph.add_edge(*pair, ids=ids)
        return graph

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(range(self.n))
        for e in self.edges:
            graph.add_edge(e.u, e.v, key=e.id)
        return graph


@dataclass(frozen=True)
class LineGraphView:
    """L(G): nodes are edge identities, adjacent when the edges share an endpoint"""

    base: Multigraph
    nodes: Tuple[int, ...]
    adjacency: Dict[int, FrozenSet[int]]

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.nodes)
        for x, nbrs in self.adjacency.items():
            graph.add_edges_from((x, y) for y in nbrs if x < y)
        return graph

    def degree(self, node: int) -> int:
        return len(self.adjacency[node])


@dataclass(frozen=True)
class Cycle:
    """edges[i] joins vertices[i] and vertices[(i + 1) % length]"""

    index: int
    vertices: Tuple[int, ...]
    edges: Tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def is_odd(self) -> bool:
        return self.length % 2 == 1

    @property
    def steps(self) -> Tuple[Tuple[int, int], ...]:
        return tuple(zip(self.vertices, self.edges))


@dataclass(frozen=True)
class CycleDecomposition:
    cycles: Tuple[Cycle, ...]
    matching: FrozenSet[int]
    cycle_of_vertex: Dict[int, int]
    cycle_of_edge: Dict[int, int]
    chords: Dict[int, bool]

    def is_chord(self, edge_id: int) -> bool:
        return self.chords.get(edge_id, False)


# ============================================================================
# CONSTRUCTION
# ============================================================================

def build(n: int, edge_list: Sequence[Tuple[int, int]]) -> Multigraph:
    """Edges receive identities 0..m-1 in input order"""
    return Multigraph(n, tuple(Edge(i, u, v) for i, (u, v) in enumerate(edge_list)))


def relabel_compact(edges: Iterable[Edge], keep: Iterable[int]) -> Tuple[Multigraph, Dict[int, int]]:
    """
    Rebuild a graph on the vertices in `keep`, renumbered in increasing order.
    Edge identities are preserved. Returns the graph and the old -> new map.
    """
    order = sorted(set(keep))
    relabel = {old: new for new, old in enumerate(order)}
    rebuilt = tuple(Edge(e.id, relabel[e.u], relabel[e.v]) for e in edges)
    return Multigraph(len(order), rebuilt), relabel


def edge_subgraph(g: Multigraph, edge_ids: Iterable[int]) -> Multigraph:
    """Subgraph spanned by the given edges, vertex labels compacted"""
    wanted = set(edge_ids)
    kept = [e for e in g.edges if e.id in wanted]
    vertices = {x for e in kept for x in (e.u, e.v)}
    graph, _ = relabel_compact(kept, vertices)
    return graph


# ============================================================================
# STRUCTURAL QUERIES
# ============================================================================

def degrees(g: Multigraph) -> List[int]:
    return [len(ids) for ids in g.incidence]


def max_degree(g: Multigraph) -> int:
    return max(degrees(g), default=0)


def is_cubic(g: Multigraph) -> bool:
    return all(d == 3 for d in degrees(g))


def is_connected(g: Multigraph) -> bool:
    if g.n <= 1:
        return True
    return nx.is_connected(g.simple_graph())


def parallel_classes(g: Multigraph) -> Dict[Tuple[int, int], Tuple[int, ...]]:
    classes = defaultdict(list)
    for e in g.edges:
        classes[e.pair()].append(e.id)
    return {pair: tuple(sorted(ids)) for pair, ids in classes.items()}


def girth(g: Multigraph) -> float:
    """Shortest cycle length; 2 for a parallel pair, INFINITE for a forest"""
    if any(len(ids) > 1 for ids in parallel_classes(g).values()):
        return 2
    return nx.girth(g.simple_graph())


def bridges(g: Multigraph) -> FrozenSet[int]:
    classes = parallel_classes(g)
    found = set()
    for a, b in nx.bridges(g.simple_graph()):
        ids = classes[(a, b) if a <= b else (b, a)]
        # a parallel pair is never a bridge
        if len(ids) == 1:
            found.add(ids[0])
    return frozenset(found)


def line_graph(g: Multigraph) -> LineGraphView:
    adjacency = {e.id: set() for e in g.edges}
    for ids in g.incidence:
        for a in ids:
            adjacency[a].update(b for b in ids if b != a)
    return LineGraphView(
        base=g,
        nodes=g.edge_ids,
        adjacency={x: frozenset(nbrs) for x, nbrs in adjacency.items()},
    )


def check_perfect_matching(g: Multigraph, matching_ids: Iterable[int]) -> FrozenSet[int]:
    ids = frozenset(matching_ids)
    covered = [0] * g.n
    for edge_id in ids:
        if edge_id not in g.edge_by_id:
            raise NotPerfectMatching(f"edge {edge_id} is not in the graph")
        e = g.edge(edge_id)
        covered[e.u] += 1
        covered[e.v] += 1
    for v, count in enumerate(covered):
        if count != 1:
            raise NotPerfectMatching(f"vertex {v} is covered {count} times")
    return ids


def cycle_decomposition(g: Multigraph, m) -> CycleDecomposition:
    """
    Split G - M into its cycles.

    Args:
        g: a cubic multigraph
        m: a Matching, or any iterable of edge identities

    Raises:
        NotCubic, NotPerfectMatching
    """
    for v, d in enumerate(degrees(g)):
        if d != 3:
            raise NotCubic(f"vertex {v} has degree {d}")
    matched = check_perfect_matching(g, getattr(m, 'edges', m))

    free = [tuple(i for i in g.incident(v) if i not in matched) for v in range(g.n)]
    cycle_of_vertex: Dict[int, int] = {}
    cycle_of_edge: Dict[int, int] = {}
    cycles: List[Cycle] = []

    for start in range(g.n):
        if start in cycle_of_vertex:
            continue
        index = len(cycles)
        vertices = [start]
        edges = [min(free[start])]
        current = g.edge(edges[0]).other(start)
        while current != start:
            vertices.append(current)
            nxt = next(i for i in free[current] if i != edges[-1])
            edges.append(nxt)
            current = g.edge(nxt).other(current)
        for v in vertices:
            cycle_of_vertex[v] = index
        for edge_id in edges:
            cycle_of_edge[edge_id] = index
        cycles.append(Cycle(index, tuple(vertices), tuple(edges)))

    chords = {
        edge_id: cycle_of_vertex[g.edge(edge_id).u] == cycle_of_vertex[g.edge(edge_id).v]
        for edge_id in sorted(matched)
    }
    return CycleDecomposition(
        cycles=tuple(cycles),
        matching=matched,
        cycle_of_vertex=cycle_of_vertex,
        cycle_of_edge=cycle_of_edge,
        chords=chords,
    )


__all__ = [
    'INFINITE',
    'Edge',
    'Multigraph',
    'LineGraphView',
    'Cycle',
    'CycleDecomposition',
    'build',
    'relabel_compact',
    'edge_subgraph',
    'degrees',
    'max_degree',
    'is_cubic',
    'is_connected',
    'parallel_classes',
    'girth',
    'bridges',
    'line_graph',
    'check_perfect_matching',
    'cycle_decomposition',
]
