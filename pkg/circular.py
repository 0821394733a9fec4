"""
(p, q)-colorings: the verifier, tight-arc analysis and the refinement that
turns a k-coloring with an acyclic tight digraph into a (k(n+1)-1, n+1)-coloring.
All arithmetic is on integers.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Hashable, Iterable, Mapping, Optional, Tuple

import networkx as nx

from errors import (
    ColorOutOfRange,
    CyclicTightArcs,
    ImproperColoring,
    InvalidParameters,
    MissingColor,
)
from multigraph import LineGraphView

Node = Hashable
Adjacency = Dict[Node, FrozenSet[Node]]


@dataclass(frozen=True)
class CircularColoring:
    p: int
    q: int
    assignment: Mapping[Node, int]

    def __post_init__(self):
        if not (isinstance(self.p, int) and isinstance(self.q, int)) or not self.p >= self.q >= 1:
            raise InvalidParameters(f"need p >= q >= 1, got p={self.p}, q={self.q}")

    @property
    def ratio(self) -> Tuple[int, int]:
        return (self.p, self.q)

    def __getitem__(self, node: Node) -> int:
        return self.assignment[node]


@dataclass(frozen=True)
class TightArcAnalysis:
    """
    D_c(G) for a k-coloring c. When the digraph is acyclic, l(v) is the largest
    number of color-(k-1) nodes on a directed path ending at v, v itself not
    counted, and n_max is the largest count over all directed paths.
    """

    k: int
    colors: Mapping[Node, int]
    arcs: FrozenSet[Tuple[Node, Node]]
    acyclic: bool
    l: Optional[Dict[Node, int]]
    n_max: Optional[int]
    digraph: nx.DiGraph = field(compare=False, repr=False)


def adjacency_of(graph) -> Adjacency:
    """Accepts a LineGraphView, a networkx graph or a node -> neighbours mapping"""
    if isinstance(graph, LineGraphView):
        return dict(graph.adjacency)
    if isinstance(graph, nx.Graph):
        return {v: frozenset(graph.adj[v]) for v in graph.nodes}
    return {v: frozenset(nbrs) for v, nbrs in graph.items()}


def circular_distance_ok(a: int, b: int, p: int, q: int) -> bool:
    d = abs(a - b)
    return q <= d <= p - q


# ============================================================================
# VERIFIER
# ============================================================================

def verify(graph, col: CircularColoring) -> bool:
    """
    True iff q <= |f(x) - f(y)| <= p - q on every adjacency.

    Raises:
        MissingColor: a node of the graph is unassigned
        ColorOutOfRange: a color is outside 0..p-1
    """
    adjacency = adjacency_of(graph)
    for node in adjacency:
        if node not in col.assignment:
            raise MissingColor(f"node {node!r} has no color")
        color = col.assignment[node]
        if not 0 <= color < col.p:
            raise ColorOutOfRange(f"node {node!r} has color {color}, p={col.p}")
    return all(
        circular_distance_ok(col.assignment[x], col.assignment[y], col.p, col.q)
        for x, nbrs in adjacency.items()
        for y in nbrs
    )


# ============================================================================
# TIGHT ARCS AND RATIO REFINEMENT
# ============================================================================

def tight_arcs(graph, c: Mapping[Node, int], k: int) -> TightArcAnalysis:
    """
    Build D_c(G): arc x -> y whenever c(y) = c(x) + 1 mod k.

    Raises:
        MissingColor: a node of the graph is unassigned
        ImproperColoring: two adjacent nodes share a color
    """
    adjacency = adjacency_of(graph)
    for node in adjacency:
        if node not in c:
            raise MissingColor(f"node {node!r} has no color")
    digraph = nx.DiGraph()
    digraph.add_nodes_from(adjacency)
    arcs = set()
    for x, nbrs in adjacency.items():
        for y in nbrs:
            if c[x] == c[y]:
                raise ImproperColoring(f"adjacent nodes {x!r} and {y!r} both have color {c[x]}")
            if c[y] == (c[x] + 1) % k:
                arcs.add((x, y))
    digraph.add_edges_from(arcs)

    top = k - 1
    if not nx.is_directed_acyclic_graph(digraph):
        return TightArcAnalysis(k, dict(c), frozenset(arcs), False, None, None, digraph)

    l: Dict[Node, int] = {}
    for v in nx.topological_sort(digraph):
        l[v] = max((l[u] + (c[u] == top) for u in digraph.predecessors(v)), default=0)
    n_max = max((l[v] + (c[v] == top) for v in l), default=0)
    return TightArcAnalysis(k, dict(c), frozenset(arcs), True, l, n_max, digraph)


def brute_force_n_max(graph, c: Mapping[Node, int], k: int) -> int:
    """Path-enumeration oracle for n_max; only for small acyclic instances"""
    analysis = tight_arcs(graph, c, k)
    if not analysis.acyclic:
        raise CyclicTightArcs("n_max is undefined on a cyclic tight digraph")
    digraph = analysis.digraph
    top = k - 1
    best = max((int(c[v] == top) for v in digraph.nodes), default=0)
    for source in digraph.nodes:
        for target in digraph.nodes:
            if source == target:
                continue
            for path in nx.all_simple_paths(digraph, source, target):
                best = max(best, sum(c[v] == top for v in path))
    return best


def refine(graph, c: Mapping[Node, int], analysis: TightArcAnalysis) -> CircularColoring:
    """
    c'(v) = (c(v) q + l(v)) mod p with p = k(n+1) - 1, q = n + 1, n = n_max.

    Raises:
        CyclicTightArcs: the analysis is not acyclic
    """
    if not analysis.acyclic:
        raise CyclicTightArcs("refinement needs an acyclic tight-arc digraph")
    q = analysis.n_max + 1
    p = analysis.k * q - 1
    assignment = {v: (c[v] * q + analysis.l[v]) % p for v in adjacency_of(graph)}
    return CircularColoring(p, q, assignment)


# ============================================================================
# TRANSFORMS
# ============================================================================

def scale(col: CircularColoring, p: int, q: int) -> CircularColoring:
    """
    Map a (p0, q0)-coloring to a (p, q)-coloring with f'(v) = floor(f(v) p / p0).
    Needs p0/q0 <= p/q; callers still verify the result.
    """
    if col.p * q > p * col.q:
        raise InvalidParameters(f"cannot scale ({col.p},{col.q}) down to ({p},{q})")
    return CircularColoring(p, q, {v: (color * p) // col.p for v, color in col.assignment.items()})


def rotate(col: CircularColoring, shift: int) -> CircularColoring:
    return CircularColoring(col.p, col.q, {v: (color + shift) % col.p for v, color in col.assignment.items()})


def restrict(col: CircularColoring, nodes: Iterable[Node]) -> CircularColoring:
    return CircularColoring(col.p, col.q, {v: col.assignment[v] for v in nodes})


__all__ = [
    'CircularColoring',
    'TightArcAnalysis',
    'adjacency_of',
    'circular_distance_ok',
    'verify',
    'tight_arcs',
    'brute_force_n_max',
    'refine',
    'scale',
    'rotate',
    'restrict',
]
