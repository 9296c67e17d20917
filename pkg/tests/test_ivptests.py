from itertools import product

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

import oracles
from ivp.dedekind import index_one_certificate
from ivp.exact import AlgebraicElement, ReducibleError, certify_irreducible
from ivp.families import integer_corpus
from ivp.ivptests import (
    BudgetExceeded,
    ForcedPrimes,
    IvpGenerator,
    brute_force_lcm,
    ef_bound_generator,
    is_integral_value,
    kummer_splitting,
    lemma43_constraint,
    psi,
    psi_lcm_oracle,
    psi_membership_check,
)
from ivp.poly import FpPoly, RatPoly, X, parse_poly
from strategies import monic_int_poly

P = parse_poly


@pytest.mark.parametrize(
    "p, n, want",
    [(2, 1, "x^2-x"), (2, 2, None), (3, 1, "x^3-x")],
)
def test_psi_examples(p, n, want):
    if want is None:
        assert psi(2, 2) == (P("x^4-x")) * P("x^2-x")
        assert psi(2, 2).degree == 6
    else:
        assert psi(p, n) == P(want)


@pytest.mark.parametrize("p, n", [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 1), (3, 2), (3, 3), (3, 4), (5, 1), (5, 2), (7, 2)])
def test_psi_equals_lcm(p, n):
    assert psi_lcm_oracle(p, n)
    assert brute_force_lcm(p, n).coeffs == oracles.lcm_mod_p_bruteforce(p, n)


def test_psi_lcm_examples():
    want = FpPoly(2, [0, 1]) ** 2 * FpPoly(2, [1, 1]) ** 2 * FpPoly(2, [1, 1, 1])
    assert brute_force_lcm(2, 2) == want
    assert brute_force_lcm(3, 1) == FpPoly(3, [0, 2, 0, 1])


def test_psi_lcm_budget():
    with pytest.raises(BudgetExceeded):
        psi_lcm_oracle(3, 5)


@pytest.mark.parametrize(
    "m, e, d, want",
    [("x^2-8", "x", 2, True), ("x^2-2", "x", 2, False), ("x^4-8", "x^2", 2, True)],
)
def test_integral_value_examples(m, e, d, want):
    assert is_integral_value(AlgebraicElement(P(m), P(e)), d) is want


def test_psi_membership_examples():
    assert psi_membership_check(2, 2, AlgebraicElement(P("x^2-2")))
    assert not psi_membership_check(2, 2, AlgebraicElement(P("x^3+x+1")))
    for m in range(-5, 6):
        assert psi_membership_check(3, 1, AlgebraicElement.integer(m))


@pytest.mark.parametrize("p, n", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_psi_membership_on_corpus_and_a_failure_witness(p, n):
    for e in integer_corpus(40, max_degree=3, seed=7):
        if e.degree <= n:
            assert psi_membership_check(p, n, e)
    # an irreducible of degree n + 1 mod p lifts to a failure
    for tail in product(range(p), repeat=n + 1):
        g = FpPoly(p, list(tail) + [1])
        if tail[0] and _irreducible_mod_p(g):
            assert not psi_membership_check(p, n, AlgebraicElement(g.lift()))
            break
    else:
        pytest.fail("no irreducible found")


def _irreducible_mod_p(g):
    from ivp.exact import is_irreducible_mod_p

    return is_irreducible_mod_p(g)


@given(monic_int_poly(max_degree=4))
def test_integral_elements_have_integral_values(f):
    try:
        certify_irreducible(f)
    except (ReducibleError, ValueError):
        assume(False)
    assert is_integral_value(AlgebraicElement(f, certificate="test"), 1)


@pytest.mark.parametrize(
    "f, p, pairs",
    [("x^2+1", 5, [(1, 1), (1, 1)]), ("x^2+1", 2, [(2, 1)]), ("x^6+x^3+1", 3, [(6, 1)])],
)
def test_kummer_examples(f, p, pairs):
    rep = kummer_splitting(P(f), p)
    assert rep.index_ok and rep.pairs == pairs


def test_kummer_refuses_when_p_divides_index():
    rep = kummer_splitting(P("x^2-8"), 2)
    assert not rep.index_ok and rep.reason == "index obstruction"


@given(monic_int_poly(min_degree=2, max_degree=4, bound=10), st.sampled_from([2, 3, 5, 7]))
def test_kummer_matches_sympy_prime_decomposition(f, p):
    try:
        assume(f.coeffs[0] != 0 and certify_irreducible(f) != "unchecked")
    except ReducibleError:
        assume(False)
    rep = kummer_splitting(f, p)
    want = oracles.splitting(f.int_coeffs(), p)
    assume(want is not None)
    if rep.index_ok:
        assert rep.pairs == want
        assert sum(e * g for e, g in rep.pairs) == f.degree


@pytest.mark.parametrize(
    "args, f, d",
    [((2, 1, 1), "x^2-x", 2), ((2, 2, 1), "(x^2-x)^2", 2), ((3, 1, 2), "x^9-x", 3)],
)
def test_ef_generator_examples(args, f, d):
    want = P("x^2-x") ** 2 if f.startswith("(") else P(f)
    assert ef_bound_generator(*args) == IvpGenerator(want, d)


def test_ef_generator_budget():
    with pytest.raises(BudgetExceeded):
        ef_bound_generator(2, 1, 5)
    with pytest.raises(BudgetExceeded):
        ef_bound_generator(3, 1, 4)
    assert ef_bound_generator(3, 1, 3).f.degree == 729


def test_generator_validation():
    with pytest.raises(ValueError):
        IvpGenerator(P("2x"), 2)
    with pytest.raises(ValueError):
        IvpGenerator(X, 0)
    g = IvpGenerator(P("x^2-x"), 2)
    assert IvpGenerator.from_json(g.to_json()) == g


def test_index_constraint_examples():
    phi = AlgebraicElement(P("x^2-x-1"))
    c = lemma43_constraint(X / 2, phi, index_one_certificate(phi.min_poly))
    assert c.forced == ForcedPrimes() and c.contradiction and c.violations == (2,)

    a = AlgebraicElement(P("x^3+8x^2+4"))  # 2 and 7 divide its index
    rep = index_one_certificate(a.min_poly)
    c = lemma43_constraint(X / 3, a, rep)
    assert 2 not in c and 7 not in c and 3 in c and 5 in c
    assert c.contradiction

    c = lemma43_constraint(RatPoly.monomial(2), a, rep)
    assert c.vacuous and not c.contradiction


def test_index_constraint_requires_small_degree():
    phi = AlgebraicElement(P("x^2-x-1"))
    with pytest.raises(ValueError):
        lemma43_constraint(P("x^2"), phi, index_one_certificate(phi.min_poly))
