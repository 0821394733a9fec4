"""
Induction driver for connected graphs of maximum degree 3.

Cut edges are peeled off or split, H1 and H2 are reported as exceptions,
girth >= 4 goes to the descent engine, and shorter girth is removed one
parallel pair or triangle at a time; the coloring of the smaller graph is
lifted back by a fast arithmetic rule or an exhaustive completion.
"""

import random
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

import networkx as nx

from circular import CircularColoring, circular_distance_ok, rotate, scale, verify
from engine import TraceEvent, color_girth4_subcubic
from errors import (
    Disconnected,
    ExceptionalInput,
    ExtensionFailed,
    MaxDegreeExceeded,
    PreconditionViolated,
    VerificationFailed,
)
from exact import extend_partial, is_pq_colorable
from multigraph import (
    Edge,
    Multigraph,
    bridges,
    build,
    degrees,
    edge_subgraph,
    girth,
    is_connected,
    line_graph,
    max_degree,
    parallel_classes,
    relabel_compact,
)

H1 = build(3, [(0, 1), (0, 1), (0, 2), (2, 1)])
H2 = build(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (4, 3)])

# color offsets for the two edges of a contracted parallel pair
PAIR_OFFSETS = (3, 6)


class ReductionKind(str, Enum):
    PARALLEL_PAIR = 'ParallelPair'
    TRIANGLE = 'Triangle'
    CUT_EDGE_SPLIT = 'CutEdgeSplit'
    HANGING_EDGE = 'HangingEdge'


class Outcome(str, Enum):
    COLORING_113 = 'Coloring113'
    EXCEPTIONAL_H1 = 'ExceptionalH1'
    EXCEPTIONAL_H2 = 'ExceptionalH2'


@dataclass(frozen=True)
class ReductionStep:
    """
    One induction step. `vertices` holds the witness in original labels:
    (u, v, u', v') for a parallel pair, (u, v, w) for a triangle, the two
    ends of the edge for cut-edge steps. A split keeps its second piece in
    `other`.
    """

    kind: ReductionKind
    original: Multigraph
    reduced: Multigraph
    removed: Tuple[int, ...]
    added: Tuple[int, ...]
    vertices: Tuple[int, ...]
    other: Optional[Multigraph] = None

    def describe(self) -> str:
        pieces = f"{self.reduced.m}" + (f"+{self.other.m}" if self.other is not None else "")
        return (f"{self.kind.value} at {self.vertices}: {self.original.m} edges -> {pieces}, "
                f"removed {list(self.removed)}, added {list(self.added)}")


@dataclass(frozen=True)
class ColoringResult:
    outcome: Outcome
    coloring: CircularColoring
    trace: Tuple[TraceEvent, ...] = ()

    @property
    def is_exceptional(self) -> bool:
        return self.outcome is not Outcome.COLORING_113


# ============================================================================
# RECOGNITION
# ============================================================================

def _same_graph(g: Multigraph, ref: Multigraph) -> bool:
    if g.n != ref.n or g.m != ref.m or sorted(degrees(g)) != sorted(degrees(ref)):
        return False
    return nx.is_isomorphic(g.to_networkx(), ref.to_networkx())


def match_exceptional(g: Multigraph) -> Optional[str]:
    """'H1', 'H2' or None"""
    if _same_graph(g, H1):
        return 'H1'
    if _same_graph(g, H2):
        return 'H2'
    return None


def is_triple_edge(g: Multigraph) -> bool:
    """K_2^3"""
    return g.n == 2 and g.m == 3


# ============================================================================
# REDUCTIONS
# ============================================================================

def _third_edge(g: Multigraph, x: int, pair: Tuple[int, int]) -> int:
    rest = [i for i in g.incident(x) if i not in pair]
    if len(rest) != 1:
        raise PreconditionViolated(f"vertex {x} of the parallel pair has degree {len(rest) + 2}")
    return rest[0]


def _contract_parallel(g: Multigraph, first: int, second: int) -> ReductionStep:
    u, v = g.edge(first).u, g.edge(first).v
    a = _third_edge(g, u, (first, second))
    b = _third_edge(g, v, (first, second))
    u2, v2 = g.edge(a).other(u), g.edge(b).other(v)
    if u2 == v2:
        raise PreconditionViolated(f"parallel pair {first},{second} has a common outside neighbour {u2}")
    new_id = g.next_edge_id()
    removed = (first, second, a, b)
    kept = [e for e in g.edges if e.id not in removed] + [Edge(new_id, u2, v2)]
    reduced, _ = relabel_compact(kept, [x for x in range(g.n) if x not in (u, v)])
    return ReductionStep(ReductionKind.PARALLEL_PAIR, g, reduced, removed, (new_id,), (u, v, u2, v2))


def _lowest_triangle(g: Multigraph) -> Optional[Tuple[Tuple[int, int, int], Tuple[int, int, int]]]:
    classes = parallel_classes(g)
    simple = g.simple_graph()
    best = None
    for (a, b), ids in classes.items():
        for w in set(simple[a]) & set(simple[b]):
            edge_ids = tuple(sorted((
                ids[0],
                classes[tuple(sorted((a, w)))][0],
                classes[tuple(sorted((b, w)))][0],
            )))
            if best is None or edge_ids < best[1]:
                best = (tuple(sorted((a, b, w))), edge_ids)
    return best


def _contract_triangle(g: Multigraph, corners: Tuple[int, int, int], edge_ids: Tuple[int, ...]) -> ReductionStep:
    merged = min(corners)
    kept = []
    for e in g.edges:
        if e.id in edge_ids:
            continue
        kept.append(Edge(
            e.id,
            merged if e.u in corners else e.u,
            merged if e.v in corners else e.v,
        ))
    reduced, _ = relabel_compact(kept, [x for x in range(g.n) if x == merged or x not in corners])
    return ReductionStep(ReductionKind.TRIANGLE, g, reduced, tuple(edge_ids), (), corners)


def contract(g: Multigraph, kind: ReductionKind, witness: Tuple[int, ...]) -> ReductionStep:
    """
    G⊙uv from two parallel edge ids, or G⊙uvw from three triangle corners.
    """
    if kind is ReductionKind.PARALLEL_PAIR:
        first, second = witness
        if g.edge(first).pair() != g.edge(second).pair():
            raise PreconditionViolated(f"edges {first} and {second} are not parallel")
        return _contract_parallel(g, first, second)
    if kind is ReductionKind.TRIANGLE:
        corners = tuple(sorted(witness))
        classes = parallel_classes(g)
        sides = [(corners[0], corners[1]), (corners[0], corners[2]), (corners[1], corners[2])]
        if any(side not in classes for side in sides):
            raise PreconditionViolated(f"vertices {corners} do not span a triangle")
        return _contract_triangle(g, corners, tuple(sorted(classes[side][0] for side in sides)))
    raise PreconditionViolated(f"{kind.value} is not a contraction")


def find_reduction(g: Multigraph) -> Optional[ReductionStep]:
    """
    G⊙uv for the lowest parallel pair, else G⊙uvw for the lowest triangle,
    else None (girth >= 4).

    Raises:
        ExceptionalInput: g is H1, H2 or K_2^3
    """
    kind = match_exceptional(g)
    if kind is not None:
        raise ExceptionalInput(f"{kind} has no reduction")
    if is_triple_edge(g):
        raise ExceptionalInput("K_2^3 is a base case, not a reduction target")
    multi = sorted(ids for ids in parallel_classes(g).values() if len(ids) > 1)
    if multi:
        return contract(g, ReductionKind.PARALLEL_PAIR, (multi[0][0], multi[0][1]))
    triangle = _lowest_triangle(g)
    if triangle is not None:
        return contract(g, ReductionKind.TRIANGLE, triangle[0])
    return None


def strip_hanging(g: Multigraph, edge_id: int) -> ReductionStep:
    edge = g.edge(edge_id)
    degs = degrees(g)
    leaf, anchor = (edge.u, edge.v) if degs[edge.u] == 1 else (edge.v, edge.u)
    if degs[leaf] != 1:
        raise PreconditionViolated(f"edge {edge_id} is not a hanging edge")
    reduced = edge_subgraph(g, [i for i in g.edge_ids if i != edge_id])
    return ReductionStep(ReductionKind.HANGING_EDGE, g, reduced, (edge_id,), (), (leaf, anchor))


def split_at_bridge(g: Multigraph, edge_id: int) -> ReductionStep:
    """Both sides of a cut edge, each keeping the cut edge as a hanging edge"""
    edge = g.edge(edge_id)
    simple = g.simple_graph()
    simple.remove_edge(edge.u, edge.v)
    side_u = nx.node_connected_component(simple, edge.u)
    if edge.v in side_u:
        raise PreconditionViolated(f"edge {edge_id} is not a cut edge")

    def piece(side) -> Multigraph:
        ids = [e.id for e in g.edges if e.u in side and e.v in side]
        return edge_subgraph(g, ids + [edge_id])

    return ReductionStep(
        ReductionKind.CUT_EDGE_SPLIT, g, piece(side_u), (), (), (edge.u, edge.v),
        other=piece(set(range(g.n)) - side_u),
    )


# ============================================================================
# EXTENSION
# ============================================================================

def extend_coloring(step: ReductionStep, inner: CircularColoring) -> CircularColoring:
    """
    Lift an (11, 3)-coloring of L(step.reduced) to L(step.original).

    Raises:
        ExtensionFailed: no completion exists (a theorem violation)
    """
    if inner.ratio != (11, 3):
        raise ExtensionFailed(f"extension expects an (11,3)-coloring, got {inner.ratio}")
    g = step.original
    line = line_graph(g)
    fixed = {e: inner[e] for e in g.edge_ids if e in inner.assignment}

    if step.kind is ReductionKind.PARALLEL_PAIR:
        first, second, a, b = step.removed
        color = inner[step.added[0]]
        fast = dict(fixed)
        fast.update({
            a: color,
            b: color,
            first: (color + PAIR_OFFSETS[0]) % 11,
            second: (color + PAIR_OFFSETS[1]) % 11,
        })
        candidate = CircularColoring(11, 3, fast)
        if verify(line, candidate):
            return candidate

    completed = extend_partial(line, 11, 3, fixed)
    if completed is None:
        raise ExtensionFailed(f"no completion for {step.describe()}")
    candidate = CircularColoring(11, 3, completed)
    if not verify(line, candidate):
        raise ExtensionFailed(f"completion does not verify for {step.describe()}")
    return candidate


def _attach_hanging(g: Multigraph, edge_id: int, inner: CircularColoring) -> CircularColoring:
    line = line_graph(g)
    taken = [inner[x] for x in line.adjacency[edge_id]]
    for color in range(inner.p):
        if all(circular_distance_ok(color, t, inner.p, inner.q) for t in taken):
            assignment = dict(inner.assignment)
            assignment[edge_id] = color
            return CircularColoring(inner.p, inner.q, assignment)
    raise ExtensionFailed(f"hanging edge {edge_id} has no free color at {inner.ratio}")


def _merge_pieces(edge_id: int,
                  left: Tuple[Outcome, CircularColoring],
                  right: Tuple[Outcome, CircularColoring]) -> Tuple[Outcome, CircularColoring]:
    """Rotate the right piece so the shared cut edge agrees, then union"""
    outcomes = [o for o, _ in (left, right) if o is not Outcome.COLORING_113]
    outcome = outcomes[0] if outcomes else Outcome.COLORING_113
    target = (11, 3) if outcome is Outcome.COLORING_113 else (4, 1)
    a = left[1] if left[1].ratio == target else scale(left[1], *target)
    b = right[1] if right[1].ratio == target else scale(right[1], *target)
    b = rotate(b, a[edge_id] - b[edge_id])
    assignment = dict(a.assignment)
    assignment.update(b.assignment)
    return outcome, CircularColoring(target[0], target[1], assignment)


# ============================================================================
# BASE CASES
# ============================================================================

def _color_path_or_cycle(g: Multigraph, trace: List[TraceEvent]) -> CircularColoring:
    degs = degrees(g)
    ends = [v for v in range(g.n) if degs[v] == 1]
    current = ends[0] if ends else 0
    order: List[int] = []
    used = set()
    while True:
        remaining = [i for i in g.incident(current) if i not in used]
        if not remaining:
            break
        edge_id = min(remaining)
        used.add(edge_id)
        order.append(edge_id)
        current = g.edge(edge_id).other(current)

    if not ends and len(order) % 2 == 1:
        k = (len(order) - 1) // 2
        native = CircularColoring(2 * k + 1, k, {e: (i * k) % (2 * k + 1) for i, e in enumerate(order)})
    else:
        native = CircularColoring(2, 1, {e: i % 2 for i, e in enumerate(order)})
    shape = 'path' if ends else 'cycle'
    trace.append(TraceEvent('base', f"{shape} of length {len(order)}: native ({native.p},{native.q})"))
    return scale(native, 11, 3)


def _color_small_directly(g: Multigraph, trace: List[TraceEvent]) -> CircularColoring:
    """Graphs one contraction away from H1 or H2 are colored by the oracle"""
    line = line_graph(g)
    witness = is_pq_colorable(line, 7, 2, limit=max(g.m, 1))
    if witness is not None:
        trace.append(TraceEvent('oracle', f"{g.m}-edge graph reduces to H1/H2: (7,2)-coloring found"))
        return scale(witness, 11, 3)
    witness = is_pq_colorable(line, 11, 3, limit=max(g.m, 1))
    if witness is None:
        raise ExtensionFailed(f"{g.m}-edge graph next to H1/H2 has no (11,3)-coloring")
    trace.append(TraceEvent('oracle', f"{g.m}-edge graph reduces to H1/H2: (11,3)-coloring found"))
    return witness


# ============================================================================
# DRIVER
# ============================================================================

def _color(g: Multigraph, rng: Optional[random.Random], trace: List[TraceEvent]) -> Tuple[Outcome, CircularColoring]:
    if max_degree(g) > 3:
        raise MaxDegreeExceeded(f"maximum degree is {max_degree(g)}")
    if not is_connected(g):
        raise Disconnected(f"graph on {g.n} vertices is not connected")
    if g.m == 0:
        return Outcome.COLORING_113, CircularColoring(11, 3, {})
    if max_degree(g) <= 2:
        return Outcome.COLORING_113, _color_path_or_cycle(g, trace)

    cut = bridges(g)
    if cut:
        edge_id = min(cut)
        edge = g.edge(edge_id)
        degs = degrees(g)
        if degs[edge.u] == 1 or degs[edge.v] == 1:
            step = strip_hanging(g, edge_id)
            trace.append(TraceEvent('split', step.describe()))
            outcome, inner = _color(step.reduced, rng, trace)
            return outcome, _attach_hanging(g, edge_id, inner)
        step = split_at_bridge(g, edge_id)
        trace.append(TraceEvent('split', step.describe()))
        left = _color(step.reduced, rng, trace)
        right = _color(step.other, rng, trace)
        return _merge_pieces(edge_id, left, right)

    kind = match_exceptional(g)
    if kind is not None:
        witness = is_pq_colorable(line_graph(g), 4, 1)
        trace.append(TraceEvent('base', f"{kind}: circular chromatic index 4"))
        return Outcome(f"Exceptional{kind}"), witness

    if is_triple_edge(g):
        trace.append(TraceEvent('base', "K_2^3: native (3,1)"))
        return Outcome.COLORING_113, scale(CircularColoring(3, 1, {e: i for i, e in enumerate(g.edge_ids)}), 11, 3)

    if girth(g) >= 4:
        coloring, _ = color_girth4_subcubic(g, rng, trace)
        return Outcome.COLORING_113, coloring

    step = find_reduction(g)
    trace.append(TraceEvent('reduce', step.describe()))
    if match_exceptional(step.reduced) is not None:
        return Outcome.COLORING_113, _color_small_directly(g, trace)
    outcome, inner = _color(step.reduced, rng, trace)
    if outcome is not Outcome.COLORING_113:
        raise ExtensionFailed(f"reduced graph came back {outcome.value}")
    return Outcome.COLORING_113, extend_coloring(step, inner)


def color_subcubic(g: Multigraph, rng: Optional[random.Random] = None,
                   trace: Optional[List[TraceEvent]] = None) -> ColoringResult:
    """
    Color L(g) for a connected graph of maximum degree <= 3.

    Returns:
        Coloring113 with an (11,3) witness, or ExceptionalH1 / ExceptionalH2
        with a (4,1) witness when g is H1 or H2 or holds one behind a cut edge

    Raises:
        MaxDegreeExceeded, Disconnected
        VerificationFailed: the final witness does not verify (a bug)
    """
    events = [] if trace is None else trace
    outcome, coloring = _color(g, rng, events)

    expected = (11, 3) if outcome is Outcome.COLORING_113 else (4, 1)
    if coloring.ratio != expected or not verify(line_graph(g), coloring):
        raise VerificationFailed(f"{outcome.value} witness fails at {expected}")
    return ColoringResult(outcome, coloring, tuple(events))


__all__ = [
    'H1',
    'H2',
    'PAIR_OFFSETS',
    'ReductionKind',
    'Outcome',
    'ReductionStep',
    'ColoringResult',
    'match_exceptional',
    'is_triple_edge',
    'contract',
    'find_reduction',
    'strip_hanging',
    'split_at_bridge',
    'extend_coloring',
    'color_subcubic',
]
