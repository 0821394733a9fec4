"""
Descent engine for cubic graphs of girth >= 4 with a perfect matching.

A valid coloring puts color 0 on the matching M, alternates 1/2 around every
cycle of G - M and spends exactly one color 3 on each odd cycle. The engine
scores a valid coloring by phi + psi (not completely blocked M-edges, plus
those among them that are chords), recolors one cycle at a time while some
cycle has both an input and an output, and hands the terminal coloring to the
tight-arc refinement, which yields an (11, 3)-coloring of L(G) or better.
"""

import random
from dataclasses import dataclass
from typing import Dict, List, NamedTuple, Optional, Tuple

import networkx as nx

from circular import CircularColoring, TightArcAnalysis, refine, restrict, scale, tight_arcs, verify
from errors import (
    GirthTooSmall,
    InvalidColoring,
    NoImprovement,
    NoPerfectMatching,
    NotCubic,
    TerminalCheckFailed,
)
from matching import Matching, cubic_double, perfect_matching
from multigraph import (
    Cycle,
    CycleDecomposition,
    LineGraphView,
    Multigraph,
    cycle_decomposition,
    degrees,
    girth,
    is_cubic,
    line_graph,
)

K = 4
TOP = K - 1


class TraceEvent(NamedTuple):
    stage: str
    message: str


@dataclass(frozen=True)
class ValidColoring:
    c: Dict[int, int]
    m: Matching
    decomposition: CycleDecomposition

    def cycle_colors(self, cycle: Cycle) -> Tuple[int, ...]:
        return tuple(self.c[e] for e in cycle.edges)


@dataclass(frozen=True)
class MEdgeArcs:
    """Blocked flags of the two arcs of one M-edge u-v"""

    edge: int
    u: int
    v: int
    blocked_uv: bool
    blocked_vu: bool

    @property
    def completely_blocked(self) -> bool:
        return self.blocked_uv and self.blocked_vu


@dataclass(frozen=True)
class ArcStatus:
    """
    inputs[i] / outputs[i] list the unblocked arcs (edge, tail, head) entering /
    leaving cycle i of G - M.
    """

    arcs: Dict[int, MEdgeArcs]
    inputs: Dict[int, Tuple[Tuple[int, int, int], ...]]
    outputs: Dict[int, Tuple[Tuple[int, int, int], ...]]


@dataclass(frozen=True)
class PotentialState:
    phi: int
    psi: int

    @property
    def total(self) -> int:
        return self.phi + self.psi


@dataclass(frozen=True)
class EngineRun:
    matching: Matching
    initial: ValidColoring
    final: ValidColoring
    totals: Tuple[int, ...]
    analysis: TightArcAnalysis
    native: CircularColoring
    coloring: CircularColoring

    @property
    def steps(self) -> int:
        return len(self.totals) - 1


def _note(trace: Optional[List[TraceEvent]], stage: str, message: str) -> None:
    if trace is not None:
        trace.append(TraceEvent(stage, message))


# ============================================================================
# VALID COLORINGS
# ============================================================================

def cycle_recolorings(cycle: Cycle) -> List[Tuple[int, ...]]:
    """Every valid coloring of one cycle, lexicographically sorted"""
    length = cycle.length
    found = set()
    if not cycle.is_odd:
        for first in (1, 2):
            found.add(tuple(first if i % 2 == 0 else 3 - first for i in range(length)))
        return sorted(found)
    for j in range(length):
        for first in (1, 2):
            colors = [0] * length
            colors[j] = 3
            for t in range(1, length):
                colors[(j + t) % length] = first if t % 2 == 1 else 3 - first
            found.add(tuple(colors))
    return sorted(found)


def _canonical_cycle_colors(cycle: Cycle) -> Tuple[int, ...]:
    length = cycle.length
    if not cycle.is_odd:
        return tuple(1 if i % 2 == 0 else 2 for i in range(length))
    j = cycle.edges.index(min(cycle.edges))
    colors = [0] * length
    colors[j] = 3
    for t in range(1, length):
        colors[(j + t) % length] = 1 if t % 2 == 1 else 2
    return tuple(colors)


def _require_engine_input(g: Multigraph) -> None:
    for v, d in enumerate(degrees(g)):
        if d != 3:
            raise NotCubic(f"vertex {v} has degree {d}")
    if girth(g) < 4:
        raise GirthTooSmall(f"girth is {girth(g)}, the engine needs at least 4")


def initial_valid_coloring(g: Multigraph, m: Matching, rng: Optional[random.Random] = None) -> ValidColoring:
    """
    M-edges get 0, even cycles alternate 1/2, each odd cycle puts its 3 on its
    lowest edge identity. With `rng`, every cycle takes a random valid coloring.

    Raises:
        NotCubic, GirthTooSmall, NotPerfectMatching
    """
    _require_engine_input(g)
    decomposition = cycle_decomposition(g, m)
    c = {e: 0 for e in decomposition.matching}
    for cycle in decomposition.cycles:
        colors = rng.choice(cycle_recolorings(cycle)) if rng is not None else _canonical_cycle_colors(cycle)
        c.update(zip(cycle.edges, colors))
    vc = ValidColoring(c, m, decomposition)
    check_valid(g, vc)
    return vc


def check_valid(g: Multigraph, vc: ValidColoring) -> None:
    for e in vc.decomposition.matching:
        if vc.c.get(e) != 0:
            raise InvalidColoring(f"M-edge {e} has color {vc.c.get(e)}")
    for cycle in vc.decomposition.cycles:
        if vc.cycle_colors(cycle) not in cycle_recolorings(cycle):
            raise InvalidColoring(f"cycle {cycle.index} is colored {vc.cycle_colors(cycle)}")
    for v in range(g.n):
        colors = [vc.c[e] for e in g.incident(v)]
        if len(set(colors)) != len(colors):
            raise InvalidColoring(f"vertex {v} sees colors {colors}")


# ============================================================================
# BLOCKED ARCS AND POTENTIAL
# ============================================================================

def arc_status(g: Multigraph, vc: ValidColoring, line: Optional[LineGraphView] = None) -> ArcStatus:
    """
    Arc x -> y of an M-edge e is unblocked when a tight walk starting at a
    color-3 edge enters e through an edge at x and leaves it through an edge
    at y on its way to another color-3 edge.
    """
    line = line or line_graph(g)
    digraph = tight_arcs(line, vc.c, K).digraph
    threes = [x for x in digraph.nodes if vc.c[x] == TOP]
    from_three = set(threes)
    to_three = set(threes)
    for x in threes:
        from_three |= nx.descendants(digraph, x)
        to_three |= nx.ancestors(digraph, x)

    def unblocked(e: int, x: int, y: int) -> bool:
        entering = any(
            a != e and digraph.has_edge(a, e) and a in from_three
            for a in g.incident(x)
        )
        leaving = any(
            b != e and digraph.has_edge(e, b) and b in to_three
            for b in g.incident(y)
        )
        return entering and leaving

    where = vc.decomposition.cycle_of_vertex
    arcs: Dict[int, MEdgeArcs] = {}
    inputs: Dict[int, List[Tuple[int, int, int]]] = {c.index: [] for c in vc.decomposition.cycles}
    outputs: Dict[int, List[Tuple[int, int, int]]] = {c.index: [] for c in vc.decomposition.cycles}
    for e in sorted(vc.decomposition.matching):
        edge = g.edge(e)
        open_uv = unblocked(e, edge.u, edge.v)
        open_vu = unblocked(e, edge.v, edge.u)
        arcs[e] = MEdgeArcs(e, edge.u, edge.v, not open_uv, not open_vu)
        for is_open, tail, head in ((open_uv, edge.u, edge.v), (open_vu, edge.v, edge.u)):
            if is_open:
                outputs[where[tail]].append((e, tail, head))
                inputs[where[head]].append((e, tail, head))
    return ArcStatus(
        arcs=arcs,
        inputs={i: tuple(a) for i, a in inputs.items()},
        outputs={i: tuple(a) for i, a in outputs.items()},
    )


def potential(status: ArcStatus, decomposition: CycleDecomposition) -> PotentialState:
    loose = [e for e, a in status.arcs.items() if not a.completely_blocked]
    return PotentialState(phi=len(loose), psi=sum(decomposition.is_chord(e) for e in loose))


def find_descent_cycle(status: ArcStatus) -> Optional[int]:
    """Lowest-indexed cycle with at least one input and one output"""
    for index in sorted(status.inputs):
        if status.inputs[index] and status.outputs.get(index):
            return index
    return None


def descent_step(g: Multigraph, vc: ValidColoring, cycle: int,
                 line: Optional[LineGraphView] = None) -> ValidColoring:
    """
    Uncolor one cycle and try every valid recoloring of it; keep the one with
    the smallest phi + psi (ties go to the lexicographically smallest colors).

    Raises:
        NoImprovement: no recoloring beats the current potential
    """
    line = line or line_graph(g)
    before = potential(arc_status(g, vc, line), vc.decomposition).total
    target = vc.decomposition.cycles[cycle]
    best: Optional[Tuple[int, ValidColoring]] = None
    for colors in cycle_recolorings(target):
        c = dict(vc.c)
        c.update(zip(target.edges, colors))
        candidate = ValidColoring(c, vc.m, vc.decomposition)
        total = potential(arc_status(g, candidate, line), vc.decomposition).total
        if best is None or total < best[0]:
            best = (total, candidate)
    if best is None or best[0] >= before:
        raise NoImprovement(
            f"cycle {cycle} has an input and an output but no recoloring lowers {before}"
        )
    return best[1]


# ============================================================================
# DRIVERS
# ============================================================================

def run_engine(
    g: Multigraph,
    matching: Optional[Matching] = None,
    rng: Optional[random.Random] = None,
    trace: Optional[List[TraceEvent]] = None,
) -> EngineRun:
    """
    Full descent on a cubic graph of girth >= 4.

    Raises:
        NotCubic, GirthTooSmall, NoPerfectMatching
        NoImprovement, TerminalCheckFailed: theorem violations (bugs)
    """
    _require_engine_input(g)
    m = matching if matching is not None else perfect_matching(g, rng)
    if m is None:
        raise NoPerfectMatching(f"cubic graph on {g.n} vertices has no perfect matching")

    line = line_graph(g)
    initial = initial_valid_coloring(g, m, rng)
    vc = initial
    status = arc_status(g, vc, line)
    totals = [potential(status, vc.decomposition).total]
    _note(trace, 'engine', f"start: {len(vc.decomposition.cycles)} cycles, potential {totals[0]}")

    while (target := find_descent_cycle(status)) is not None:
        vc = descent_step(g, vc, target, line)
        check_valid(g, vc)
        status = arc_status(g, vc, line)
        total = potential(status, vc.decomposition).total
        if total >= totals[-1]:
            raise NoImprovement(f"potential went from {totals[-1]} to {total}")
        totals.append(total)
        _note(trace, 'engine', f"recolored cycle {target}: potential {totals[-2]} -> {total}")

    analysis = tight_arcs(line, vc.c, K)
    if not analysis.acyclic:
        raise TerminalCheckFailed("terminal tight-arc digraph has a directed cycle")
    if analysis.n_max > 2:
        raise TerminalCheckFailed(f"a tight path carries {analysis.n_max} color-3 edges")

    native = refine(line, vc.c, analysis)
    if not verify(line, native):
        raise TerminalCheckFailed(f"refined ({native.p},{native.q})-coloring does not verify")
    coloring = scale(native, 11, 3)
    if not verify(line, coloring):
        raise TerminalCheckFailed("scaled (11,3)-coloring does not verify")
    _note(trace, 'engine', f"done after {len(totals) - 1} steps, n_max={analysis.n_max}, "
                           f"native ({native.p},{native.q})")

    return EngineRun(
        matching=m,
        initial=initial,
        final=vc,
        totals=tuple(totals),
        analysis=analysis,
        native=native,
        coloring=coloring,
    )


def color_girth4_cubic(g: Multigraph, rng: Optional[random.Random] = None,
                       trace: Optional[List[TraceEvent]] = None) -> CircularColoring:
    """(11, 3)-coloring of L(g) for a cubic graph of girth >= 4"""
    return run_engine(g, rng=rng, trace=trace).coloring


def color_girth4_subcubic(g: Multigraph, rng: Optional[random.Random] = None,
                          trace: Optional[List[TraceEvent]] = None) -> Tuple[CircularColoring, EngineRun]:
    """
    Same bound for a 2-edge-connected subcubic graph of girth >= 4: the engine
    runs on the cubic double and the coloring is read back through copy one.
    """
    if is_cubic(g):
        run = run_engine(g, rng=rng, trace=trace)
        return run.coloring, run
    double, embedding = cubic_double(g)
    _note(trace, 'engine', f"doubled {g.n} vertices into a cubic graph on {double.n}")
    run = run_engine(double, rng=rng, trace=trace)
    # copy one keeps g's identities, so the embedding is a restriction
    coloring = restrict(run.coloring, [embedding[e] for e in g.edge_ids])
    return coloring, run


__all__ = [
    'K',
    'TraceEvent',
    'ValidColoring',
    'MEdgeArcs',
    'ArcStatus',
    'PotentialState',
    'EngineRun',
    'cycle_recolorings',
    'initial_valid_coloring',
    'check_valid',
    'arc_status',
    'potential',
    'find_descent_cycle',
    'descent_step',
    'run_engine',
    'color_girth4_cubic',
    'color_girth4_subcubic',
]
