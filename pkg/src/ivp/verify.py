"""Registered example checks with a deterministic pass/fail report."""

from __future__ import annotations

import json
import platform
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import __version__
from .closure import IvpGenerator, closure_member, in_Sfd, z_closure_witness
from .dedekind import TriState, dedekind_divides_index, index_one_certificate
from .exact import DEFAULT_SEED, AlgebraicElement, char_poly_of_element, cyclotomic
from .families import (
    FamilyKind,
    crosscheck_family,
    family_verdict,
    fcn_poly,
    geometric_partial_sums,
    make_family,
    tower_exponent,
    tower_min_poly,
)
from .ivptests import (
    ef_bound_generator,
    integral_value_charpoly,
    is_integral_value,
    kummer_splitting,
    lemma43_constraint,
    psi_lcm_oracle,
    psi_membership_check,
)
from .newton import element_valuations, multiset_json, root_valuations, val_str
from .poly import RatPoly, X, parse_poly
from .sequences import classify_prefix

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


class UsageError(ValueError):
    pass


@dataclass
class Item:
    anchor: str
    command: str
    expected: object
    actual: object
    status: str

    def to_json(self) -> dict:
        return {
            "anchor": self.anchor,
            "command": self.command,
            "expected": self.expected,
            "actual": self.actual,
            "status": self.status,
        }


@dataclass
class VerificationReport:
    suite: str
    items: list[Item] = field(default_factory=list)
    toolchain: str = ""

    def count(self, status: str) -> int:
        return sum(i.status == status for i in self.items)

    @property
    def ok(self) -> bool:
        return self.count(FAIL) == 0

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "toolchain": self.toolchain,
            "summary": {s: self.count(s) for s in (PASS, FAIL, INCONCLUSIVE)},
            "items": [i.to_json() for i in self.items],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def text(self) -> str:
        lines = [f"suite: {self.suite}  ({self.toolchain})"]
        for i in self.items:
            lines.append(f"[{i.status:>12}] {i.anchor}: {i.command}")
            if i.status != PASS:
                lines.append(f"               expected {i.expected}, got {i.actual}")
        lines.append(
            f"{self.count(PASS)} passed, {self.count(FAIL)} failed, {self.count(INCONCLUSIVE)} inconclusive"
        )
        return "\n".join(lines)


@dataclass
class Check:
    anchor: str
    command: str
    run: Callable[[int], tuple[object, object, str | None]]


def _cmp(expected, actual) -> tuple[object, object, str]:
    return expected, actual, PASS if expected == actual else FAIL


def _elem(text: str) -> AlgebraicElement:
    return AlgebraicElement(parse_poly(text))


# -- individual checks; each returns (expected, actual, status) --------------


def _index_one(seed):
    # an element of index one: f(a) integral with deg f < deg a forces Z coefficients
    e = AlgebraicElement(cyclotomic(16))
    rep = index_one_certificate(e.min_poly, seed=seed)
    c = lemma43_constraint(X / 2, e, rep)
    return _cmp(["yes", True], [rep.index_is_one.value, c.contradiction])


def _two_z(seed):
    es = [_elem("x^2-8"), _elem("x^3-16"), _elem("x^2+2x+4")]
    return _cmp([True] * 3, [in_Sfd(e, IvpGenerator(X, 2)) for e in es])


def _nth_roots(seed):
    got = []
    for p in (2, 3, 5):
        for n in (2, 3):
            for k in range(1, 5 if n == 2 else 4):
                s = AlgebraicElement(tower_min_poly(p, n, k))
                cp = integral_value_charpoly(s.apply(RatPoly.monomial(n)), p)
                prev = X - 1 if k == 1 else tower_min_poly(p, n, k - 1)
                got.append(cp.is_integral() and cp == prev**n)
    return _cmp(True, all(got))


def _tower_valuations(seed):
    vals = [
        val_str(min(element_valuations(AlgebraicElement(tower_min_poly(2, 2, k)), 2)))
        for k in (1, 2, 3)
    ]
    return _cmp(["1/2", "3/4", "7/8"], vals)


def _psi_lcm(seed):
    pairs = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]
    return _cmp([True] * 5, [psi_lcm_oracle(p, n) for p, n in pairs])


def _psi_membership(seed):
    inside = [_elem(t) for t in ("x^2+1", "x^2-x-1", "x^2-2", "x^2+x+1", "x-5")]
    got = [psi_membership_check(2, 2, e) for e in inside] + [psi_membership_check(2, 2, _elem("x^3+x+1"))]
    return _cmp([True] * 5 + [False], got)


def _psi_index(seed):
    e = _elem("x^2-x-1")
    rep = index_one_certificate(e.min_poly, seed=seed)
    return _cmp([True, False], [lemma43_constraint(X / 2, e, rep).contradiction,
                                lemma43_constraint(RatPoly((3, 1)), e, rep).contradiction])


def _dedekind(seed):
    got = []
    for c in (2, 3, 6):
        for n in range(2, 8):
            f = fcn_poly(c, n)
            for p in (2, 3, 5, 7):
                if c % p == 0:
                    got.append(dedekind_divides_index(f, p, seed)[0] is True)
                elif n % p == 0:
                    got.append(dedekind_divides_index(f, p, seed)[0] is False)
    return _cmp(True, all(got))


def _dedekind_quadratic(seed):
    # Z[sqrt d] is maximal exactly when d is not 1 mod 4
    ds = (2, 3, 5, 6, 7, 10)
    return _cmp([d % 4 == 1 for d in ds], [dedekind_divides_index(RatPoly((-d, 0, 1)), 2, seed)[0] for d in ds])


def _fcn_valuation(seed):
    e = AlgebraicElement(fcn_poly(2, 3))
    return _cmp([["2/3", 3]], multiset_json(element_valuations(e, 2)))


def _fcn_family(seed):
    s = make_family(FamilyKind.FCN_FAMILY, {"c": 2, "ns": [3, 5, 7]})
    v = family_verdict(s, 2)
    return _cmp(["PseudoDivergent", True, True], [v.report.kind.value, v.evidence_ok, crosscheck_family(s, 2).ok])


def _rou_p_power(seed):
    s = make_family(FamilyKind.ROOTS_OF_UNITY_P_POWER, {"p": 2, "len": 4})
    v2, v3 = family_verdict(s, 2), family_verdict(s, 3)
    return _cmp(
        ["PseudoDivergent", ["1/2", "1/4", "1/8"], "PseudoStationary", True, True],
        [v2.report.kind.value, [val_str(g) for g in v2.report.gauge], v3.report.kind.value,
         v2.evidence_ok, crosscheck_family(s, 2).ok],
    )


def _rou_valuation(seed):
    got = [val_str(min(root_valuations(cyclotomic(2**k).shift(1), 2))) for k in range(1, 7)]
    got += [val_str(min(root_valuations(cyclotomic(3**k).shift(1), 3))) for k in range(1, 4)]
    want = [val_str(Fraction(1, 2 ** (k - 1))) for k in range(1, 7)]
    want += [val_str(Fraction(1, 2 * 3 ** (k - 1))) for k in range(1, 4)]
    return _cmp(want, got)


def _rou_primes(seed):
    s = make_family(FamilyKind.ROOTS_OF_UNITY_PRIMES, {"len": 6})
    got = [family_verdict(s, l).report.kind.value for l in (2, 3, 5, 7)]
    return _cmp(["PseudoStationary"] * 4 + [True], got + [all(crosscheck_family(s, l).ok for l in (2, 3, 5, 7))])


def _radicals(seed):
    s = make_family(FamilyKind.PRIME_PRODUCT_RADICALS, {"len": 5})
    got = [family_verdict(s, p).report.kind.value for p in (2, 3, 5)]
    return _cmp(["PseudoDivergent"] * 3 + [True], got + [all(crosscheck_family(s, p).ok for p in (2, 3, 5))])


def _partial_sums(seed):
    r = classify_prefix(geometric_partial_sums(3, 5))
    return _cmp(["PseudoConvergent", ["1", "2", "3", "4"]], [r.kind.value, [val_str(g) for g in r.gauge]])


def _ef_generator(seed):
    got = []
    for (p, e0, f0), t in [((2, 1, 1), "x^2+x-4"), ((2, 2, 1), "x^2-7"), ((3, 1, 2), "x^2+1")]:
        e = _elem(t)
        rep = kummer_splitting(e.min_poly, p, seed)
        if not rep.index_ok or any(a > e0 or b > f0 for a, b in rep.pairs):
            return [True] * 3, got, INCONCLUSIVE
        g = ef_bound_generator(p, e0, f0)
        got.append(is_integral_value(e.apply(g.f), g.d))
    return _cmp([True] * 3, got)


def _sfd(seed):
    g = IvpGenerator(X, 2)
    return _cmp([True, False, True], [in_Sfd(_elem("x^2-8"), g), in_Sfd(_elem("x^2-2"), g),
                                      in_Sfd(_elem("x^2-2"), IvpGenerator(X, 1))])


def _closure(seed):
    g = [IvpGenerator(X, 2)]
    tower = make_family(FamilyKind.NTH_ROOT_TOWER, {"p": 2, "n": 2, "len": 4})
    got = [closure_member(g, _elem("x^2+2x+4")), closure_member(g, _elem("x^2-2")), closure_member([], _elem("x^2-2")),
           all(closure_member([tower.generator], e) for e in tower.elements)]
    return _cmp([True, False, True, True], got)


def _z_closed(seed):
    out = []
    for t in ("x^2-2", "x^2-x-1"):
        w = z_closure_witness(_elem(t), 8)
        out.append(None if w is None else [w.k, str(w.char_poly)])
    out.append(z_closure_witness(AlgebraicElement.integer(7), 8))
    return _cmp([[2, "x^2 - 2*x + 1/2"], [2, "x^2 - x + 1/4"], None], out)


CHECKS: list[Check] = [
    Check("Example 1.2 (index one)", "index zeta_16; X/2 at zeta_16", _index_one),
    Check("Example 1.3 (2Z)", "integral --gen x/2 on 2*(algebraic integers)", _two_z),
    Check("Example 1.4 (nth roots of p)", "integral x^n/p on p^(b_k), p in 2,3,5, n in 2,3", _nth_roots),
    Check("nth roots of p: valuations", "family nth-root-tower --p 2 --n 2", _tower_valuations),
    Check("Lemma on Psi (1)", "psi lcm oracle", _psi_lcm),
    Check("Lemma on Psi (2)", "psi membership, n = 2", _psi_membership),
    Check("Lemma on Psi (3)", "index constraint at golden ratio", _psi_index),
    Check("Theorem 4.5 (Dedekind)", "index f_{c,n} grid", _dedekind),
    Check("Theorem 4.5 (quadratic fields)", "index x^2 - d at 2", _dedekind_quadratic),
    Check("Lemma on f_cn (2)", "valuation of a root of f_{2,3} at 2", _fcn_valuation),
    Check("Example f_cn family", "family fcn --c 2", _fcn_family),
    Check("Example roots of unity p-power", "family roots-of-unity-p-power --p 2", _rou_p_power),
    Check("Example roots of unity p-power: 1 - zeta", "newton Phi_{p^k}(x+1)", _rou_valuation),
    Check("Example roots of unity primes", "family roots-of-unity-primes", _rou_primes),
    Check("Example prime-product radicals", "family prime-product-radicals", _radicals),
    Check("Geometric partial sums", "classify partial sums of 3^i", _partial_sums),
    Check("Lemma 5.1 generator", "kummer + ef generator", _ef_generator),
    Check("S(f,d) sets", "closure --gens x/2", _sfd),
    Check("Theorem 6.5 (closure)", "closure --gens x/2, tower generator", _closure),
    Check("Z is polynomially closed", "zwitness --kmax 8", _z_closed),
]


def _select(filter: str | None) -> list[Check]:
    if not filter:
        return list(CHECKS)
    key = filter.lower()
    chosen = [c for c in CHECKS if key in c.anchor.lower()]
    if not chosen:
        raise UsageError(f"no registered check matches anchor pattern {filter!r}")
    return chosen


def _run_one(check: Check, seed: int) -> Item:
    try:
        expected, actual, status = check.run(seed)
    except Exception as exc:  # a crash is a failed check, reported like any other
        expected, actual, status = "no error", f"{type(exc).__name__}: {exc}", FAIL
    return Item(check.anchor, check.command, _jsonable(expected), _jsonable(actual), status)


def _jsonable(x):
    return json.loads(json.dumps(x, default=str))


def run_verify_paper(filter: str | None = None, seed: int = DEFAULT_SEED, jobs: int = 1) -> VerificationReport:
    checks = _select(filter)
    toolchain = f"ivp {__version__}, python {platform.python_version()}"
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            items = list(pool.map(lambda c: _run_one(c, seed), checks))
    else:
        items = [_run_one(c, seed) for c in checks]
    return VerificationReport("verify-paper", items, toolchain)
