"""
File formats for graphs and colorings
Edge-list text (primary, keeps parallel edges), graph6 (simple graphs only),
coloring files, result records and timestamped JSON run dumps
"""

import json
import os
from dataclasses import dataclass
from datetime import datetime
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

import networkx as nx
from dotenv import load_dotenv

from circular import CircularColoring
from engine import TraceEvent
from errors import ColoringFormatError, GraphFormatError
from multigraph import Multigraph, build

load_dotenv()

OUTPUT_DIR = os.getenv('CCI_OUTPUT_DIR', '.')

FORMATS = ('auto', 'edgelist', 'graph6')
GRAPH6_HEADER = '>>graph6<<'


@dataclass(frozen=True)
class GraphDocument:
    format: str
    payload: str
    graph: Multigraph


def _int_fields(line: str, count: int, what: str, error=GraphFormatError) -> Tuple[int, ...]:
    fields = line.split()
    if len(fields) != count:
        raise error(f"{what}: expected {count} integers, got {line!r}")
    try:
        return tuple(int(x) for x in fields)
    except ValueError:
        raise error(f"{what}: expected {count} integers, got {line!r}")


def _content_lines(text: str) -> List[str]:
    return [line.strip() for line in text.splitlines() if line.strip()]


# ============================================================================
# EDGE LIST
# ============================================================================

def parse_edge_list(text: str) -> Multigraph:
    """
    First line "n m", then m lines "u v"; edge identity = line order.

    Raises:
        GraphFormatError: bad header, wrong edge count, non-integer fields
        LoopRejected, BadVertex: from graph construction
    """
    lines = _content_lines(text)
    if not lines:
        raise GraphFormatError("empty edge list")
    n, m = _int_fields(lines[0], 2, "header")
    if n < 0 or m < 0:
        raise GraphFormatError(f"header has negative counts: {lines[0]!r}")
    body = lines[1:]
    if len(body) != m:
        raise GraphFormatError(f"header announces {m} edges, file has {len(body)}")
    pairs = [_int_fields(line, 2, f"edge {i}") for i, line in enumerate(body)]
    return build(n, pairs)


def serialize_edge_list(g: Multigraph) -> str:
    """Edges in identity order; parsing the output renumbers them 0..m-1"""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{e.u} {e.v}" for e in sorted(g.edges, key=lambda e: e.id))
    return '\n'.join(lines) + '\n'


# ============================================================================
# GRAPH6
# ============================================================================

def parse_graph6(text: str) -> Multigraph:
    lines = _content_lines(text)
    if not lines:
        raise GraphFormatError("empty graph6 input")
    token = lines[0]
    if token.startswith(GRAPH6_HEADER):
        token = token[len(GRAPH6_HEADER):]
    try:
        graph = nx.from_graph6_bytes(token.encode('ascii'))
    except (nx.NetworkXError, ValueError, IndexError, UnicodeEncodeError) as e:
        raise GraphFormatError(f"invalid graph6 string {token!r}: {e}")
    return Multigraph.from_networkx(graph)


def detect_format(text: str) -> str:
    lines = _content_lines(text)
    if not lines:
        raise GraphFormatError("empty input")
    if lines[0].startswith(GRAPH6_HEADER):
        return 'graph6'
    if len(lines[0].split()) == 2:
        return 'edgelist'
    if len(lines[0].split()) == 1 and all(63 <= ord(ch) <= 126 for ch in lines[0]):
        return 'graph6'
    raise GraphFormatError(f"cannot tell the format of {lines[0]!r}")


def parse_graph(text: str, fmt: str = 'auto') -> GraphDocument:
    if fmt not in FORMATS:
        raise GraphFormatError(f"unknown format {fmt!r}, expected one of {FORMATS}")
    resolved = detect_format(text) if fmt == 'auto' else fmt
    graph = parse_edge_list(text) if resolved == 'edgelist' else parse_graph6(text)
    return GraphDocument(format=resolved, payload=text, graph=graph)


def read_graph(path: str, fmt: str = 'auto') -> GraphDocument:
    """
    Read a graph file

    Raises:
        GraphFormatError: unreadable or malformed file
    """
    try:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except (OSError, UnicodeDecodeError) as e:
        raise GraphFormatError(f"cannot read {path}: {e}")
    return parse_graph(text, fmt)


# ============================================================================
# COLORINGS AND RESULT RECORDS
# ============================================================================

def _checked_ratio(p: int, q: int) -> None:
    if q < 1 or p < q:
        raise ColoringFormatError(f"need p >= q >= 1, got p={p}, q={q}")


def format_coloring(col: CircularColoring) -> str:
    lines = [f"{col.p} {col.q}"]
    lines.extend(f"{e} {col.assignment[e]}" for e in sorted(col.assignment))
    return '\n'.join(lines) + '\n'


def format_result_record(
    coloring: CircularColoring,
    outcome: Optional[str] = None,
    fields: Optional[Mapping[str, Any]] = None,
    steps: Sequence[TraceEvent] = (),
) -> str:
    """
    Line-oriented record:

        outcome: Coloring113
        p: 11
        q: 3
        colors:
          0 4
        steps:
          engine: start: 5 cycles, potential 6
    """
    lines = []
    if outcome is not None:
        lines.append(f"outcome: {outcome}")
    for key, value in (fields or {}).items():
        lines.append(f"{key}: {value}")
    lines.append(f"p: {coloring.p}")
    lines.append(f"q: {coloring.q}")
    lines.append("colors:")
    lines.extend(f"  {e} {coloring.assignment[e]}" for e in sorted(coloring.assignment))
    lines.append("steps:")
    lines.extend(f"  {event.stage}: {event.message}" for event in steps)
    return '\n'.join(lines) + '\n'


@dataclass(frozen=True)
class ResultRecord:
    fields: Dict[str, str]
    coloring: CircularColoring
    steps: Tuple[TraceEvent, ...]


def parse_result_record(text: str) -> ResultRecord:
    fields: Dict[str, str] = {}
    colors: Dict[int, int] = {}
    steps: List[TraceEvent] = []
    block = None
    for raw in text.splitlines():
        if not raw.strip():
            continue
        if raw[0].isspace():
            if block == 'colors':
                edge_id, color = _int_fields(raw, 2, "colors entry", ColoringFormatError)
                if edge_id in colors:
                    raise ColoringFormatError(f"edge {edge_id} is colored twice")
                colors[edge_id] = color
            elif block == 'steps':
                stage, _, message = raw.strip().partition(': ')
                steps.append(TraceEvent(stage, message))
            else:
                raise ColoringFormatError(f"indented line outside a block: {raw!r}")
            continue
        key, sep, value = raw.partition(':')
        if not sep:
            raise ColoringFormatError(f"expected 'key: value', got {raw!r}")
        key = key.strip()
        block = key if key in ('colors', 'steps') else None
        if block is None:
            fields[key] = value.strip()

    try:
        p, q = int(fields['p']), int(fields['q'])
    except (KeyError, ValueError):
        raise ColoringFormatError("result record needs integer 'p' and 'q' fields")
    _checked_ratio(p, q)
    return ResultRecord(fields, CircularColoring(p, q, colors), tuple(steps))


def parse_coloring(text: str) -> CircularColoring:
    """
    A plain coloring file ("p q" then "edge_id color" lines) or a result record.

    Raises:
        ColoringFormatError: malformed lines, p < q, duplicate edge identities
    """
    lines = _content_lines(text)
    if not lines:
        raise ColoringFormatError("empty coloring file")
    if ':' in lines[0]:
        return parse_result_record(text).coloring

    p, q = _int_fields(lines[0], 2, "header", ColoringFormatError)
    _checked_ratio(p, q)
    colors: Dict[int, int] = {}
    for line in lines[1:]:
        edge_id, color = _int_fields(line, 2, "coloring entry", ColoringFormatError)
        if edge_id in colors:
            raise ColoringFormatError(f"edge {edge_id} is colored twice")
        colors[edge_id] = color
    return CircularColoring(p, q, colors)


# ============================================================================
# RUN DUMPS
# ============================================================================

def save_run_output(command: str, output_data: Dict[str, Any], output_dir: Optional[str] = None) -> str:
    """Save a command's output to a JSON file with timestamp."""
    timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')
    filename = f"{command}_output_{timestamp}.json"
    directory = output_dir or OUTPUT_DIR
    os.makedirs(directory, exist_ok=True)
    filepath = os.path.join(directory, filename)

    output = {
        "command": command,
        "timestamp": datetime.now().isoformat(),
        "data": output_data
    }

    with open(filepath, 'w', encoding='utf-8') as f:
        json.dump(output, f, indent=2, ensure_ascii=False)

    return filepath


__all__ = [
    'OUTPUT_DIR',
    'FORMATS',
    'GraphDocument',
    'ResultRecord',
    'parse_edge_list',
    'serialize_edge_list',
    'parse_graph6',
    'detect_format',
    'parse_graph',
    'read_graph',
    'format_coloring',
    'format_result_record',
    'parse_result_record',
    'parse_coloring',
    'save_run_output',
]
