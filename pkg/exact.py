"""
Brute-force oracle for circular chromatic numbers and indices of small graphs.
Backtracking with most-constrained-node-first ordering and circular-distance
propagation; every answer comes with a verifying witness.
"""

import os
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Set, Tuple

import networkx as nx
from dotenv import load_dotenv

from circular import Adjacency, CircularColoring, Node, adjacency_of, verify
from errors import InvalidParameters, TooLarge, VerificationFailed
from multigraph import Multigraph, line_graph

load_dotenv()

ORACLE_NODE_LIMIT = int(os.getenv('CCI_ORACLE_LIMIT', '24'))


def _forbidden(color: int, p: int, q: int) -> Set[int]:
    return {(color + d) % p for d in range(-q + 1, q)}


def _components(adjacency: Adjacency) -> List[Set[Node]]:
    seen: Set[Node] = set()
    parts = []
    for start in adjacency:
        if start in seen:
            continue
        part = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in adjacency[x]:
                if y not in part:
                    part.add(y)
                    stack.append(y)
        seen |= part
        parts.append(part)
    return parts


def _backtrack(
    adjacency: Adjacency,
    p: int,
    q: int,
    fixed: Mapping[Node, int],
) -> Optional[Dict[Node, int]]:
    """Core search; `fixed` nodes are pre-colored and never changed"""
    domains: Dict[Node, Set[int]] = {v: set(range(p)) for v in adjacency}
    assignment: Dict[Node, int] = {}

    def assign(v: Node, color: int, doms: Dict[Node, Set[int]]) -> Optional[Dict[Node, Set[int]]]:
        if color not in doms[v]:
            return None
        banned = _forbidden(color, p, q)
        updated = dict(doms)
        updated[v] = {color}
        for w in adjacency[v]:
            if w in assignment:
                continue
            remaining = updated[w] - banned
            if not remaining:
                return None
            updated[w] = remaining
        return updated

    for v, color in fixed.items():
        if v not in adjacency:
            continue
        nxt = assign(v, color, domains)
        if nxt is None:
            return None
        domains = nxt
        assignment[v] = color

    # rotation symmetry: a component with no fixed node may pin one node to 0
    for part in _components(adjacency):
        if not part & assignment.keys():
            anchor = max(part, key=lambda v: len(adjacency[v]))
            domains[anchor] = {0}

    def pick(doms: Dict[Node, Set[int]]) -> Node:
        return min(
            (v for v in adjacency if v not in assignment),
            key=lambda v: (len(doms[v]), -sum(w not in assignment for w in adjacency[v])),
        )

    def search(doms: Dict[Node, Set[int]]) -> bool:
        if len(assignment) == len(adjacency):
            return True
        v = pick(doms)
        for color in sorted(doms[v]):
            nxt = assign(v, color, doms)
            if nxt is None:
                continue
            assignment[v] = color
            if search(nxt):
                return True
            del assignment[v]
        return False

    return dict(assignment) if search(domains) else None


def _check_size(node_count: int, limit: Optional[int]) -> None:
    limit = ORACLE_NODE_LIMIT if limit is None else limit
    if node_count > limit:
        raise TooLarge(f"{node_count} nodes exceeds the oracle limit of {limit}")


# ============================================================================
# PUBLIC ORACLE
# ============================================================================

def is_pq_colorable(graph, p: int, q: int, limit: Optional[int] = None) -> Optional[CircularColoring]:
    """
    A verifying (p, q)-coloring if one exists, else None.

    Raises:
        TooLarge: more nodes than the configured limit
    """
    if not p >= q >= 1:
        raise InvalidParameters(f"need p >= q >= 1, got p={p}, q={q}")
    adjacency = adjacency_of(graph)
    _check_size(len(adjacency), limit)
    found = _backtrack(adjacency, p, q, {})
    if found is None:
        return None
    witness = CircularColoring(p, q, found)
    if not verify(adjacency, witness):
        raise VerificationFailed(f"oracle produced a non-verifying ({p},{q}) witness")
    return witness


def extend_partial(graph, p: int, q: int, fixed: Mapping[Node, int],
                   limit: Optional[int] = None) -> Optional[Dict[Node, int]]:
    """
    Complete a partial (p, q)-coloring; the size limit applies to the free nodes only.
    """
    adjacency = adjacency_of(graph)
    _check_size(sum(v not in fixed for v in adjacency), limit)
    return _backtrack(adjacency, p, q, fixed)


def candidate_ratios(node_count: int, lower_bound: int = 1) -> List[Fraction]:
    """Reduced p/q with q <= p <= node_count and p/q >= lower_bound, increasing"""
    ratios = {
        Fraction(p, q)
        for p in range(1, node_count + 1)
        for q in range(1, p + 1)
        if Fraction(p, q) >= lower_bound
    }
    return sorted(ratios)


def _clique_number(adjacency: Adjacency) -> int:
    graph = nx.Graph()
    graph.add_nodes_from(adjacency)
    graph.add_edges_from((x, y) for x, nbrs in adjacency.items() for y in nbrs)
    return max((len(c) for c in nx.find_cliques(graph)), default=0)


def chi_c(graph, limit: Optional[int] = None) -> Tuple[Fraction, CircularColoring]:
    """
    Exact circular chromatic number with a witness.
    The empty graph gets 0 with an empty (1, 1) witness.
    """
    adjacency = adjacency_of(graph)
    _check_size(len(adjacency), limit)
    if not adjacency:
        return Fraction(0), CircularColoring(1, 1, {})

    lower = max(1, _clique_number(adjacency))
    for ratio in candidate_ratios(len(adjacency), lower):
        witness = is_pq_colorable(adjacency, ratio.numerator, ratio.denominator, limit)
        if witness is not None:
            return ratio, witness
    raise VerificationFailed("no candidate ratio succeeded, even p = node count")


def chromatic_number(graph, limit: Optional[int] = None) -> int:
    """chi_c restricted to q = 1"""
    adjacency = adjacency_of(graph)
    _check_size(len(adjacency), limit)
    if not adjacency:
        return 0
    for p in range(max(1, _clique_number(adjacency)), len(adjacency) + 1):
        if is_pq_colorable(adjacency, p, 1, limit) is not None:
            return p
    return len(adjacency)


def chi_c_index(g: Multigraph, limit: Optional[int] = None) -> Tuple[Fraction, CircularColoring]:
    """chi_c of L(g); the witness colors edge identities"""
    _check_size(g.m, limit)
    return chi_c(line_graph(g), limit)


__all__ = [
    'ORACLE_NODE_LIMIT',
    'is_pq_colorable',
    'extend_partial',
    'candidate_ratios',
    'chi_c',
    'chromatic_number',
    'chi_c_index',
]
