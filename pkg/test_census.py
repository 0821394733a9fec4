"""
Tests for the multigraph census and the gap check
"""

from fractions import Fraction
from itertools import combinations

import networkx as nx
import pytest

from census import GapReport, enumerate_multigraphs, gapcheck
from errors import InvalidParameters
from multigraph import degrees, is_connected, max_degree


def test_two_vertex_census():
    graphs = list(enumerate_multigraphs(2, 3))
    assert [g.m for g in graphs] == [1, 2, 3]


def test_census_invariants():
    for g in enumerate_multigraphs(4, 3):
        d = degrees(g)
        assert is_connected(g)
        assert max_degree(g) <= 3
        assert d == sorted(d, reverse=True)


def test_dedupe_keeps_one_per_class():
    raw = list(enumerate_multigraphs(4, 1))
    unique = list(enumerate_multigraphs(4, 1, dedupe=True))
    # connected simple graphs on 2, 3 and 4 vertices: 1 + 2 + 6
    assert len(unique) == 9
    assert len(raw) > len(unique)
    for a, b in combinations(unique, 2):
        assert not nx.is_isomorphic(a.to_networkx(), b.to_networkx())


def test_gapcheck_two_vertices():
    report = gapcheck(2, 3, workers=1)
    assert isinstance(report, GapReport)
    assert report.checked == 3
    assert report.values == {Fraction(1): 1, Fraction(2): 1, Fraction(3): 1}
    assert report.ok


def test_gapcheck_sees_h1():
    report = gapcheck(3, 3, workers=1)
    assert Fraction(4) in report.values
    assert report.ok


def test_gapcheck_four_vertices_has_no_violation():
    report = gapcheck(4, 3, workers=1)
    assert report.violations == []
    assert all(not (Fraction(11, 3) < v < 4) for v in report.values)


def test_worker_pool_matches_inline_run():
    inline = gapcheck(3, 2, workers=1)
    pooled = gapcheck(3, 2, workers=2, chunksize=1)
    assert pooled.checked == inline.checked
    assert pooled.values == inline.values


@pytest.mark.parametrize("max_vertices, max_mult", [(9, 3), (1, 3), (4, 0), (4, 4)])
def test_gapcheck_bounds(max_vertices, max_mult):
    with pytest.raises(InvalidParameters):
        gapcheck(max_vertices, max_mult, workers=1)


@pytest.mark.slow
def test_gapcheck_up_to_eight_vertices():
    report = gapcheck(8, 3, dedupe=True)
    assert report.ok
    assert Fraction(4) in report.values
