"""
Tests for graph files, coloring files and result records
"""

import json

import networkx as nx
import pytest

import graph_io
from circular import CircularColoring
from engine import TraceEvent
from errors import ColoringFormatError, GraphFormatError, LoopRejected
from graph_io import (
    detect_format,
    format_coloring,
    format_result_record,
    parse_coloring,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    parse_result_record,
    read_graph,
    save_run_output,
    serialize_edge_list,
)
from multigraph import Edge

# =============================================================================
# EDGE LIST
# =============================================================================

def test_parse_edge_list_keeps_line_order():
    g = parse_edge_list("3 3\n0 1\n1 2\n0 1\n")
    assert g.edges == (Edge(0, 0, 1), Edge(1, 1, 2), Edge(2, 0, 1))


@pytest.mark.parametrize("text", [
    "",
    "3\n0 1\n",
    "3 2\n0 1\n",
    "3 1\n0 x\n",
    "3 1\n0 1 2\n",
])
def test_malformed_edge_lists(text):
    with pytest.raises(GraphFormatError):
        parse_edge_list(text)


def test_loop_in_edge_list():
    with pytest.raises(LoopRejected):
        parse_edge_list("2 1\n1 1\n")


def test_serialization_is_stable(petersen, k23):
    for g in (petersen, k23):
        text = serialize_edge_list(g)
        assert parse_edge_list(text) == g
        assert serialize_edge_list(parse_edge_list(text)) == text


def test_serialization_renumbers_sparse_identities():
    g = parse_edge_list("2 2\n0 1\n0 1\n")
    assert serialize_edge_list(g).splitlines() == ["2 2", "0 1", "0 1"]


# =============================================================================
# GRAPH6
# =============================================================================

def test_graph6_matches_networkx(petersen):
    raw = nx.to_graph6_bytes(nx.petersen_graph(), header=False).decode('ascii')
    assert parse_graph6(raw) == petersen
    with_header = nx.to_graph6_bytes(nx.petersen_graph()).decode('ascii')
    assert detect_format(with_header) == 'graph6'
    assert parse_graph(with_header).graph == petersen


def test_format_detection():
    assert detect_format("3 2\n0 1\n1 2\n") == 'edgelist'
    assert detect_format("IheA@GUAo\n") == 'graph6'
    with pytest.raises(GraphFormatError):
        detect_format("not a graph at all")


def test_bad_graph6():
    with pytest.raises(GraphFormatError):
        parse_graph6("A")


def test_read_graph(tmp_path, k23):
    path = tmp_path / "k23.txt"
    path.write_text(serialize_edge_list(k23))
    doc = read_graph(str(path))
    assert doc.format == 'edgelist'
    assert doc.graph == k23


# =============================================================================
# COLORINGS
# =============================================================================

def test_plain_coloring_file():
    col = parse_coloring("11 3\n0 0\n1 3\n2 7\n")
    assert col.ratio == (11, 3)
    assert col.assignment == {0: 0, 1: 3, 2: 7}
    assert parse_coloring(format_coloring(col)) == col


@pytest.mark.parametrize("text", [
    "3 11\n0 0\n",
    "3 0\n",
    "11 3\n0 1\n0 2\n",
    "11 3\n0\n",
    "",
])
def test_malformed_coloring_files(text):
    with pytest.raises(ColoringFormatError):
        parse_coloring(text)


def test_result_record():
    col = CircularColoring(4, 1, {0: 0, 1: 1, 2: 2})
    steps = [TraceEvent('base', 'H1: circular chromatic index 4')]
    text = format_result_record(col, 'ExceptionalH1', steps=steps)
    assert text.splitlines()[:4] == ["outcome: ExceptionalH1", "p: 4", "q: 1", "colors:"]

    record = parse_result_record(text)
    assert record.fields['outcome'] == 'ExceptionalH1'
    assert record.coloring == col
    assert record.steps == tuple(steps)
    assert parse_coloring(text) == col


def test_record_needs_p_and_q():
    with pytest.raises(ColoringFormatError):
        parse_coloring("outcome: Coloring113\ncolors:\n  0 1\n")


# =============================================================================
# RUN DUMPS
# =============================================================================

def test_save_run_output(tmp_path, monkeypatch):
    monkeypatch.setattr(graph_io, 'OUTPUT_DIR', str(tmp_path))
    path = save_run_output('color', {"p": 11, "q": 3})
    with open(path, encoding='utf-8') as f:
        dumped = json.load(f)
    assert dumped["command"] == 'color'
    assert dumped["data"] == {"p": 11, "q": 3}
    assert path.startswith(str(tmp_path))
