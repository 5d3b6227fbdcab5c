import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paritybq.algebra import AlgebraError, duplicate
from paritybq.cocycle import (
    CocycleError,
    CocyclePair,
    InvalidColoring,
    NotCompatible,
    NotStrong,
    Tier,
    WeightPolynomial,
    boltzmann_weight,
    classify,
    coboundary_1,
    compatibility_report,
    format_cocycle,
    invariant_polynomial,
    is_cocycle,
    is_compatible,
    is_reduced,
    is_strongly_compatible,
    odd_writhe_pair,
    parse_cocycle,
    polynomial_to_string,
    strong_boltzmann_weight,
    strong_invariant_polynomial,
    zero_pair,
)
from paritybq.coloring import Coloring, enumerate_colorings
from paritybq.gauss import parse_gauss_code
from paritybq.search import cocycle_solutions, pair_from_vector

import oracles
from conftest import (
    CLASSICAL_TREFOIL,
    COCYCLE3_Z5,
    COCYCLE4_Z3,
    PARITY3,
    PARITY4,
    TREFOIL_21,
)
from strategies import diagrams

MONO2 = Coloring((2, 2, 2, 2))


def test_is_reduced(phi3):
    assert is_reduced(zero_pair(3, 5).phi0)
    assert is_reduced(phi3.phi0)
    assert not is_reduced(((0, 1), (1, 1)))


def test_is_cocycle(x3, phi3):
    assert is_cocycle(zero_pair(3, 5).phi0, x3, 5)
    assert is_cocycle(phi3.phi0, x3, 5)
    assert is_cocycle(phi3.phi0, x3.even, 5)


@pytest.mark.parametrize("lam", [(0, 0, 0), (4, 4, 4), (1, 0, 0), (2, 3, 1)])
def test_coboundaries_are_cocycles(bq3, lam):
    table = coboundary_1(lam, bq3, 5)
    assert is_cocycle(table, bq3, 5)
    if len(set(lam)) == 1:
        assert all(v == 0 for row in table for v in row)


def test_coboundary_of_indicator_matches_formula(bq3):
    lam = (1, 0, 0)
    table = coboundary_1(lam, bq3, 5)
    for x, y in itertools.product(range(1, 4), repeat=2):
        expect = lam[x - 1] - lam[bq3.under_op(x, y) - 1] - lam[y - 1] + lam[bq3.over_op(y, x) - 1]
        assert table[x - 1][y - 1] == expect % 5


def test_compatibility_examples(x3, x4, phi3, phi4):
    assert is_compatible(zero_pair(3, 5), x3)
    assert is_strongly_compatible(phi3, x3)
    assert is_strongly_compatible(phi4, x4)
    for X in (x3, x4):
        for m in (2, 3, 5):
            assert is_strongly_compatible(odd_writhe_pair(X.n, m), X)


def test_classify_and_verified(x3, phi3):
    assert classify(phi3, x3) == Tier.STRONG
    assert phi3.verified(x3).tier == Tier.STRONG
    broken = CocyclePair(5, phi3.phi0, ((1, 0, 0), (0, 0, 0), (0, 0, 0)))
    assert classify(broken, x3) < Tier.STRONG


def test_report_cites_witness(x3, phi3):
    rows = [list(r) for r in COCYCLE3_Z5]
    rows[1][0] = 3
    report = compatibility_report(CocyclePair.from_matrix(rows, 5), x3)
    bad = report.first_failure()
    assert bad is not None and bad.witness


def test_nonzero_diagonal_reported(x3):
    rows = [list(r) for r in COCYCLE3_Z5]
    rows[0][0] = 1
    bad = compatibility_report(CocyclePair.from_matrix(rows, 5), x3).first_failure()
    assert bad.name == "reduced" and bad.witness == (1,)


def test_boltzmann_weight_examples(x3, phi3):
    d = parse_gauss_code(TREFOIL_21)
    assert boltzmann_weight(d, x3, MONO2, phi3) == 1
    assert strong_boltzmann_weight(d, x3, MONO2, phi3) == (0, 1)
    assert boltzmann_weight(d, x3, MONO2, zero_pair(3, 5)) == 0
    u = parse_gauss_code("")
    assert boltzmann_weight(u, x3, Coloring((1,)), phi3) == 0
    assert strong_boltzmann_weight(u, x3, Coloring((3,)), phi3) == (0, 0)


def test_weight_rejects_non_coloring(x3, phi3):
    with pytest.raises(InvalidColoring):
        boltzmann_weight(parse_gauss_code(TREFOIL_21), x3, Coloring((1, 2, 2, 2)), phi3)


def test_weight_requires_compatibility(x3, phi3):
    d = parse_gauss_code(TREFOIL_21)
    bad = CocyclePair(5, ((0, 1, 0), (0, 0, 0), (0, 0, 0)), phi3.phi1)
    with pytest.raises(CocycleError):
        boltzmann_weight(d, x3, MONO2, bad)
    weak_only = next(
        p for p in map(lambda v: pair_from_vector(v, 3, 5), cocycle_solutions(x3, 5, Tier.COMPATIBLE))
        if not is_strongly_compatible(p, x3)
    )
    assert boltzmann_weight(d, x3, MONO2, weak_only) in range(5)
    with pytest.raises(NotStrong):
        strong_boltzmann_weight(d, x3, MONO2, weak_only)
    with pytest.raises(NotCompatible):
        invariant_polynomial(d, x3, bad)


def test_size_mismatch(x4, phi3):
    with pytest.raises(CocycleError):
        invariant_polynomial(parse_gauss_code(""), x4, phi3)


def test_classical_diagram_has_no_odd_weight(x4, phi4):
    d = parse_gauss_code(CLASSICAL_TREFOIL)
    for f in enumerate_colorings(d, x4):
        even, odd = strong_boltzmann_weight(d, x4, f, phi4)
        assert odd == 0
        assert even == boltzmann_weight(d, x4, f, phi4)


def test_polynomials_example1(x3, phi3):
    d = parse_gauss_code(TREFOIL_21)
    p = invariant_polynomial(d, x3, phi3)
    assert p.terms == {0: 2, 1: 1}
    assert polynomial_to_string(p) == "u + 2"
    assert polynomial_to_string(invariant_polynomial(parse_gauss_code(""), x3, phi3)) == "3"


def test_non_parity_mode(x3, phi3):
    even_pair = CocyclePair(5, phi3.phi0, phi3.phi0)
    for code in ("", TREFOIL_21):
        d = parse_gauss_code(code)
        assert invariant_polynomial(d, x3, phi3, parity=False).terms == {0: 3}
        assert invariant_polynomial(d, x3, even_pair, parity=False).terms == {0: 3}


def test_strong_polynomial_virtual_trefoil(x4, phi4):
    p = strong_invariant_polynomial(parse_gauss_code(TREFOIL_21), x4, phi4)
    assert polynomial_to_string(p) == "4v^2"
    mirror = strong_invariant_polynomial(parse_gauss_code("O1-O2-U1-U2-"), x4, phi4)
    assert polynomial_to_string(mirror) == "4v"


@pytest.mark.parametrize(
    "variables, terms, text",
    [
        (2, {(0, 0): 4}, "4"),
        (2, {(2, 1): 4}, "4u^2v"),
        (2, {(2, 0): 4, (1, 0): 4, (0, 0): 8}, "4u^2 + 4u + 8"),
        (2, {(2, 0): 8, (1, 0): 4, (0, 0): 4}, "8u^2 + 4u + 4"),
        (2, {(1, 1): 1, (0, 2): 3}, "uv + 3v^2"),
        (1, {0: 2, 1: 1}, "u + 2"),
        (1, {}, "0"),
    ],
)
def test_polynomial_to_string(variables, terms, text):
    assert polynomial_to_string(WeightPolynomial(variables, terms)) == text


def test_specialize():
    p = WeightPolynomial(2, {(2, 1): 4, (1, 0): 2})
    assert p.specialize(3).terms == {0: 4, 1: 2}
    assert p.total() == 6


@settings(max_examples=40, deadline=None)
@given(diagrams(max_n=3))
def test_weights_match_blind_oracle(x3, phi3, d):
    got = sorted(strong_boltzmann_weight(d, x3, f, phi3) for f in enumerate_colorings(d, x3))
    assert got == oracles.blind_weights(d.code(), PARITY3, COCYCLE3_Z5, 5)


@settings(max_examples=40, deadline=None)
@given(diagrams(max_n=3))
def test_one_variable_is_specialized_two_variable(x4, phi4, d):
    strong = strong_invariant_polynomial(d, x4, phi4)
    assert invariant_polynomial(d, x4, phi4).terms == strong.specialize(3).terms


def test_matches_oracle_verdict_on_random_pairs(x3):
    rng = random.Random(7)
    for _ in range(200):
        rows = [[0 if (j == i) else rng.randrange(5) for j in range(6)] for i in range(3)]
        pair = CocyclePair.from_matrix(rows, 5)
        assert is_strongly_compatible(pair, x3) == oracles.pair_ok(PARITY3, rows, 5)
        assert is_compatible(pair, x3) == oracles.pair_ok(PARITY3, rows, 5, strong=False)


@pytest.mark.parametrize("matrix, m", [(COCYCLE3_Z5, 5), (COCYCLE4_Z3, 3)])
def test_cocycle_file_round_trip(matrix, m):
    pair = CocyclePair.from_matrix(matrix, m)
    assert parse_cocycle(format_cocycle(pair)) == pair


@pytest.mark.parametrize(
    "text",
    [
        "cocycle 1 mod 1\n0 0\n",
        "cocycle 1 over 3\n0 0\n",
        "cocycle 2 mod 3\n0 0 0 0\n",
        "cocycle 1 mod 3\n0 3\n",
    ],
)
def test_parse_cocycle_errors(text):
    with pytest.raises(AlgebraError):
        parse_cocycle(text)


def test_pair_shape_checked():
    with pytest.raises(CocycleError):
        CocyclePair.from_matrix([[0, 0, 0]], 3)
    with pytest.raises(CocycleError):
        CocyclePair(3, ((0,),), ((0, 0),))
