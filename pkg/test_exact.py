"""
Tests for the exact oracle: known circular chromatic indices and witnesses
"""

from fractions import Fraction

import pytest

from circular import verify
from census import enumerate_multigraphs
from conftest import cycle_graph
from errors import TooLarge
from exact import (
    candidate_ratios,
    chi_c,
    chi_c_index,
    chromatic_number,
    extend_partial,
    is_pq_colorable,
)
from multigraph import line_graph

TRIANGLE = {0: {1, 2}, 1: {0, 2}, 2: {0, 1}}


def small_line_graphs(h1, h2):
    graphs = list(enumerate_multigraphs(4, 3, dedupe=True))
    graphs += [cycle_graph(5), cycle_graph(7), h1, h2]
    return [line_graph(g) for g in graphs]


def test_candidate_ratios_are_reduced_and_sorted():
    assert candidate_ratios(3) == [Fraction(1), Fraction(3, 2), Fraction(2), Fraction(3)]
    assert candidate_ratios(5, 2) == [Fraction(2), Fraction(5, 2), Fraction(3), Fraction(4), Fraction(5)]


def test_triangle_is_not_21_colorable():
    assert is_pq_colorable(TRIANGLE, 2, 1) is None
    witness = is_pq_colorable(TRIANGLE, 3, 1)
    assert witness is not None and verify(TRIANGLE, witness)


def test_empty_graph():
    value, witness = chi_c({})
    assert value == 0
    assert witness.assignment == {}


@pytest.mark.parametrize("name, expected", [
    ("petersen", Fraction(11, 3)),
    ("h1", Fraction(4)),
    ("h2", Fraction(4)),
    ("k23", Fraction(3)),
    ("k4", Fraction(3)),
    ("k33", Fraction(3)),
])
def test_known_indices(request, name, expected):
    g = request.getfixturevalue(name)
    value, witness = chi_c_index(g)
    assert value == expected
    assert witness.ratio == (expected.numerator, expected.denominator)
    assert verify(line_graph(g), witness)


@pytest.mark.parametrize("k", [2, 3, 4])
def test_odd_cycles(k):
    value, _ = chi_c_index(cycle_graph(2 * k + 1))
    assert value == 2 + Fraction(1, k)


def test_even_cycle_is_two():
    assert chi_c_index(cycle_graph(6))[0] == 2


def test_chromatic_number_of_line_graphs(petersen, k4):
    assert chromatic_number(line_graph(petersen)) == 4
    assert chromatic_number(line_graph(k4)) == 3


def test_size_limit(petersen):
    with pytest.raises(TooLarge):
        chi_c_index(petersen, limit=10)
    with pytest.raises(TooLarge):
        is_pq_colorable(line_graph(petersen), 4, 1, limit=14)


def test_extend_partial_respects_fixed_colors(k23):
    line = line_graph(k23)
    completed = extend_partial(line, 11, 3, {0: 5})
    assert completed[0] == 5
    assert len(completed) == 3


def test_extend_partial_reports_impossible():
    # at (11, 3) colors 6..8 remain for the third node; at (3, 1) equal fixed colors clash
    assert extend_partial(TRIANGLE, 11, 3, {0: 0, 1: 3}) is not None
    assert extend_partial(TRIANGLE, 3, 1, {0: 0, 1: 0}) is None


# =============================================================================
# PROPERTIES
# =============================================================================

def test_circular_value_sits_just_below_the_chromatic_number(h1, h2):
    for line in small_line_graphs(h1, h2):
        value, witness = chi_c(line)
        chi = chromatic_number(line)
        assert chi - 1 < value <= chi
        assert verify(line, witness)


def test_colorability_is_monotone_in_the_ratio(h1, h2):
    for line in small_line_graphs(h1, h2):
        value, _ = chi_c(line)
        seen_colorable = False
        for ratio in candidate_ratios(len(line.nodes)):
            colorable = is_pq_colorable(line, ratio.numerator, ratio.denominator) is not None
            assert colorable == (ratio >= value)
            if seen_colorable:
                assert colorable
            seen_colorable = seen_colorable or colorable
