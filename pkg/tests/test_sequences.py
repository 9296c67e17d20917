import json
import random
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from ivp.families import geometric_partial_sums
from ivp.intfact import v_p
from ivp.newton import INFINITY
from ivp.sequences import (
    Kind,
    UltrametricError,
    ValuationMatrix,
    ball_cover,
    classify_prefix,
    gamma_grid,
    longest_divergent_scan,
    random_ultrametric,
    residue_classes,
    theorem24_crosscheck,
)


def integers_at(points, p):
    return ValuationMatrix.from_function(len(points), lambda i, j: F(v_p(points[j] - points[i], p)))


def rou_2power(n):
    # s_k = zeta_{2^k}, k = 1..n
    return ValuationMatrix.from_function(n, lambda j, k: F(1, 2**k))


def constant(n, v):
    return ValuationMatrix.from_function(n, lambda j, k: F(v))


@st.composite
def ultrametrics(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    return random_ultrametric(n, random.Random(draw(st.integers(0, 10**9))))


# -- classification ------------------------------------------------------------


def test_two_power_roots_of_unity_diverge():
    r = classify_prefix(rou_2power(5))
    assert r.kind is Kind.DIVERGENT
    assert r.gauge == [F(1, 2), F(1, 4), F(1, 8), F(1, 16)]
    assert str(r.breadth_ideal_hint) == "MaximalIdeal"
    assert r.caveat == "prefix-certified, length 5"


def test_prime_roots_of_unity_are_stationary():
    r = classify_prefix(constant(5, 0))
    assert r.kind is Kind.STATIONARY and r.gauge == [F(0)]
    assert str(r.breadth_ideal_hint) == "WholeRing"


def test_partial_sums_converge():
    r = classify_prefix(geometric_partial_sums(2, 6))
    assert r.kind is Kind.CONVERGENT
    assert r.gauge == [F(k) for k in range(1, 6)]


def test_geometric_sums_match_integer_data():
    sums = [sum(2**i for i in range(k + 1)) for k in range(6)]
    assert integers_at(sums, 2) == geometric_partial_sums(2, 6)


def test_short_prefix_is_insufficient():
    r = classify_prefix(constant(2, 1))
    assert r.kind is Kind.NONE and r.reason == "insufficient"


def test_mixed_pattern_returns_none():
    r = classify_prefix(integers_at([0, 1, 2, 3], 2))
    assert r.kind is Kind.NONE


@given(ultrametrics())
def test_gauge_monotonicity(m):
    r = classify_prefix(m)
    g = r.gauge
    if r.kind is Kind.CONVERGENT:
        assert all(a < b for a, b in zip(g, g[1:]))
    elif r.kind is Kind.DIVERGENT:
        assert all(a > b for a, b in zip(g, g[1:]))
    elif r.kind is Kind.STATIONARY:
        assert len(g) == 1


@given(st.integers(3, 8), st.sampled_from([F(0), F(1, 2), F(3), F(-1)]), st.randoms())
def test_stationary_is_permutation_invariant(n, v, rnd):
    m = constant(n, v)
    idx = list(range(n))
    rnd.shuffle(idx)
    assert classify_prefix(m.submatrix(idx)).kind is Kind.STATIONARY


@given(st.integers(3, 8), st.sampled_from([2, 3, 5]))
def test_reversing_convergent_gives_divergent(n, p):
    m = geometric_partial_sums(p, n)
    assert classify_prefix(m).kind is Kind.CONVERGENT
    assert classify_prefix(m.reversed()).kind is Kind.DIVERGENT


# -- validation ---------------------------------------------------------------


def test_ultrametric_violation_rejected():
    with pytest.raises(UltrametricError):
        ValuationMatrix(((INFINITY, 0, 1), (0, INFINITY, 2), (1, 2, INFINITY)))
    with pytest.raises(UltrametricError):
        ValuationMatrix(((INFINITY, 1), (2, INFINITY)))
    with pytest.raises(UltrametricError):
        ValuationMatrix(((0, 1), (1, INFINITY)))


@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=3, max_size=3))
def test_triangle_validation_matches_definition(vals):
    a, b, c = vals
    ok = sorted(vals)[0] == sorted(vals)[1]
    try:
        ValuationMatrix(((INFINITY, a, c), (a, INFINITY, b), (c, b, INFINITY)))
        assert ok
    except UltrametricError:
        assert not ok


def test_json_roundtrip():
    m = rou_2power(3)
    obj = json.loads(json.dumps(m.to_json()))
    assert obj["entries"][0] == ["inf", "1/2", "1/4"]
    assert ValuationMatrix.from_json(obj) == m


# -- covers and classes ---------------------------------------------------------


def test_cover_examples():
    m = integers_at([0, 1, 2, 3], 2)
    assert ball_cover(m, 1) == (0, 1)
    assert len(ball_cover(m, 2)) == 4
    assert ball_cover(constant(1, 0), F(5)) == (0,)
    with pytest.raises(ValueError):
        ball_cover(m, 0)


def test_class_examples():
    m = integers_at([0, 1, 2, 3], 2)
    assert residue_classes(m, 1) == [(0, 2), (1, 3)]
    assert residue_classes(constant(4, 0), F(1, 3)) == [(0,), (1,), (2,), (3,)]
    assert len(residue_classes(constant(4, F(1, 2)), F(1, 4))) == len(ball_cover(constant(4, F(1, 2)), F(1, 4))) == 1


def test_roots_of_unity_classes_merge_with_gamma():
    m = rou_2power(5)
    counts = [len(residue_classes(m, F(1, 2 ** (k - 1)))) for k in range(1, 6)]
    assert counts == [5, 4, 3, 2, 1]


@given(ultrametrics())
def test_cover_size_equals_class_count(m):
    for g in gamma_grid(m):
        classes = residue_classes(m, g)
        assert len(ball_cover(m, g)) == len(classes) == oracles.class_count(m.entries, g)


def test_gamma_above_all_entries_gives_singletons():
    m = random_ultrametric(6, random.Random(3))
    g = max(m.off_diagonal()) + 1
    assert len(ball_cover(m, g)) == len(residue_classes(m, g)) == 6


@given(ultrametrics())
def test_crosscheck_passes(m):
    assert theorem24_crosscheck(m).ok


@given(st.integers(3, 8))
def test_divergent_prefix_fits_one_ball(n):
    m = rou_2power(n)
    r = classify_prefix(m)
    assert len(ball_cover(m, min(r.gauge))) == 1


def test_greedy_scan_finds_divergent_subsequence():
    m = integers_at([0, 8, 4, 2, 1], 2)
    sub = longest_divergent_scan(m)
    assert classify_prefix(m.submatrix(sub)).kind is Kind.DIVERGENT
