import pytest
from hypothesis import given, settings

from paritybq.algebra import duplicate
from paritybq.coloring import (
    Coloring,
    counting_invariant,
    crossing_arcs,
    enumerate_colorings,
    is_coloring,
    left_arcs,
)
from paritybq.gauss import parse_gauss_code

import oracles
from conftest import BIQUANDLE3, PARITY3, PARITY4, TREFOIL_21
from strategies import diagrams


def test_unknot_colorings(x3):
    cols = enumerate_colorings(parse_gauss_code(""), x3)
    assert [c.labels for c in cols] == [(1,), (2,), (3,)]


def test_virtual_trefoil_colorings(x3):
    cols = enumerate_colorings(parse_gauss_code(TREFOIL_21), x3)
    assert len(cols) == 3
    assert Coloring((2, 2, 2, 2)) in cols


def test_virtual_trefoil_four_element(x4):
    assert counting_invariant(parse_gauss_code(TREFOIL_21), x4) == 4


def test_arcs_at_crossing():
    d = parse_gauss_code(TREFOIL_21)
    c = d.crossings[1]
    assert crossing_arcs(d, c) == (1, 2, 3, 0)
    assert left_arcs(d, c) == (1, 0)
    neg = parse_gauss_code("O1-O2-U1-U2-")
    assert left_arcs(neg, neg.crossings[1]) == (2, 3)


def test_is_coloring_rejects_bad_labels(x3):
    d = parse_gauss_code(TREFOIL_21)
    assert is_coloring(d, x3, (2, 2, 2, 2))
    assert not is_coloring(d, x3, (2, 2, 2))
    assert not is_coloring(d, x3, (4, 2, 2, 2))
    assert not is_coloring(d, x3, (1, 2, 2, 2))


@given(diagrams(max_n=4))
def test_duplicated_biquandle_ignores_parity(bq3, d):
    dup = duplicate(bq3)
    assert enumerate_colorings(d, dup) == enumerate_colorings(d, bq3)
    assert enumerate_colorings(d, dup, parity=False) == enumerate_colorings(d, dup)


@settings(max_examples=60, deadline=None)
@given(diagrams(max_n=3))
def test_colorings_are_valid_and_match_blind_filter(x3, d):
    found = [c.labels for c in enumerate_colorings(d, x3)]
    assert all(is_coloring(d, x3, f) for f in found)
    assert found == oracles.blind_colorings(d.code(), PARITY3)


@pytest.mark.parametrize("code", ["", TREFOIL_21, "O1+U1+", "O1-U2+O2+U1-"])
def test_non_parity_mode_matches_blind_filter(x4, code):
    d = parse_gauss_code(code)
    expect = oracles.blind_colorings(code, PARITY4, parity=False)
    assert [c.labels for c in enumerate_colorings(d, x4, parity=False)] == expect


def test_classical_trefoil_plain_biquandle(bq3):
    d = parse_gauss_code("O1+U2+O3+U1+O2+U3+")
    expect = oracles.blind_colorings(d.code(), BIQUANDLE3 + BIQUANDLE3)
    assert counting_invariant(d, bq3) == len(expect)
