"""Exact generators for the example sequences, with closed-form valuations.

Each family yields a prefix of algebraic integers together with a formula
for ``v_p(s_i - s_j)`` wherever one is known in closed form.  Indices are
1-based, matching the usual ``s_1, s_2, ...`` numbering.
"""

from __future__ import annotations

import enum
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt, prod
from typing import Callable

from .dedekind import TriState, dedekind_divides_index, index_one_certificate
from .exact import AlgebraicElement, ReducibleError, certify_irreducible, cyclotomic, perron_irreducible
from .intfact import primes_up_to, require_prime, v_p
from .ivptests import BudgetExceeded, IvpGenerator, is_integral_value
from .newton import INFINITY, Val, difference_valuations, element_valuations, multiset_json, val_str
from .poly import RatPoly, X
from .sequences import ClassificationReport, Kind, ValuationMatrix, classify_prefix

MAX_CYCLOTOMIC = 2**8
MAX_RADICAL_DEGREE = 64
CROSSCHECK_BUDGET = 64  # product of the two degrees
CORPUS_SEED = 1729


class FamilyKind(str, enum.Enum):
    ROOTS_OF_UNITY_P_POWER = "roots-of-unity-p-power"
    ROOTS_OF_UNITY_PRIMES = "roots-of-unity-primes"
    NTH_ROOT_TOWER = "nth-root-tower"
    PRIME_PRODUCT_RADICALS = "prime-product-radicals"
    FCN_FAMILY = "fcn"
    SCALED_RING = "scaled-ring"

    @classmethod
    def parse(cls, s) -> FamilyKind:
        if isinstance(s, cls):
            return s
        key = str(s).strip()
        for k in cls:
            if key in (k.name, k.value) or key.upper().replace("-", "_") == k.name:
                return k
        raise ValueError(f"unknown family kind {s!r}; choose from {[k.value for k in cls]}")


ValFormula = Callable[[int, int, int], "Val | None"]


@dataclass
class SequenceSample:
    kind: FamilyKind
    params: dict
    elements: list[AlgebraicElement]
    val_formula: ValFormula
    elem_formula: Callable[[int, int], "Val | None"]
    provenance: str
    expected_verdict: Callable[[int], str]
    gauge_limit: Callable[[int], "Val | None"] = lambda p: None
    generator: IvpGenerator | None = None
    tail_hint: Callable[[int], int] = lambda p: 1

    def __len__(self) -> int:
        return len(self.elements)

    def formula_matrix(self, p: int, indices: list[int] | None = None) -> ValuationMatrix | None:
        """Matrix of formula values over ``indices`` (1-based); None if any entry is unknown."""
        idx = list(range(1, len(self) + 1)) if indices is None else list(indices)
        rows = []
        for i in idx:
            row = []
            for j in idx:
                if i == j:
                    row.append(INFINITY)
                    continue
                v = self.val_formula(min(i, j), max(i, j), p)
                if v is None:
                    return None
                row.append(v)
            rows.append(tuple(row))
        labels = [self.elements[i - 1].label or f"s_{i}" for i in idx]
        return ValuationMatrix(tuple(rows), labels)

    def tail_start(self, p: int) -> int:
        """Smallest t such that every pair in ``s_t, s_t+1, ...`` has a closed form."""
        n = len(self)
        t = n
        while t > 1 and all(self.val_formula(t - 1, j, p) is not None for j in range(t, n + 1)):
            t -= 1
        return t

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "params": {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.params.items()},
            "provenance": self.provenance,
            "elements": [e.to_json() for e in self.elements],
            "generator": None if self.generator is None else self.generator.to_json(),
        }


def _budget(ok: bool, msg: str):
    if not ok:
        raise BudgetExceeded(msg)


def _length(params: dict) -> int:
    n = int(params.get("len", params.get("length", 4)))
    if n < 1:
        raise ValueError("prefix length must be positive")
    return n


def _roots_of_unity_p_power(params: dict) -> SequenceSample:
    p = int(params.get("p", 2))
    require_prime(p)
    L = _length(params)
    _budget(p**L <= MAX_CYCLOTOMIC, f"cyclotomic index {p}^{L} exceeds {MAX_CYCLOTOMIC}")
    elems = [AlgebraicElement(cyclotomic(p**k), label=f"zeta_{p**k}") for k in range(1, L + 1)]

    def pair(j, k, q):
        # zeta_{p^k} - zeta_{p^j} = zeta_{p^k} (1 - primitive p^k-th root), j < k
        return Fraction(1, p ** (k - 1) * (p - 1)) if q == p else Fraction(0)

    return SequenceSample(
        FamilyKind.ROOTS_OF_UNITY_P_POWER,
        {"p": p, "len": L},
        elems,
        pair,
        lambda k, q: Fraction(0),
        f"primitive {p}^k-th roots of unity; v_{p}(1 - zeta_(p^k)) = 1/(p^(k-1)(p-1)), units elsewhere",
        lambda q: Kind.DIVERGENT.value if q == p else Kind.STATIONARY.value,
        lambda q: Fraction(0),
    )


def _roots_of_unity_primes(params: dict) -> SequenceSample:
    L = _length(params)
    primes = primes_up_to(MAX_CYCLOTOMIC)
    _budget(L <= len(primes), f"only {len(primes)} primes up to {MAX_CYCLOTOMIC}")
    qs = primes[:L]
    elems = [AlgebraicElement(cyclotomic(q), label=f"zeta_{q}") for q in qs]
    return SequenceSample(
        FamilyKind.ROOTS_OF_UNITY_PRIMES,
        {"len": L, "primes": list(qs)},
        elems,
        lambda j, k, l: Fraction(0),  # 1 - zeta_{qr} is a unit
        lambda k, l: Fraction(0),
        "primitive q-th roots of unity over the primes q; all pairwise differences are units",
        lambda l: Kind.STATIONARY.value,
        lambda l: Fraction(0),
    )


def tower_exponent(n: int, k: int) -> Fraction:
    """``b_k = (1 - n^-k)/(n - 1)``."""
    return Fraction(n**k - 1, n**k * (n - 1))


def tower_min_poly(p: int, n: int, k: int) -> RatPoly:
    N = n**k
    return RatPoly.monomial(N) - p ** ((N - 1) // (n - 1))


def _nth_root_tower(params: dict) -> SequenceSample:
    p = int(params.get("p", 2))
    n = int(params.get("n", 2))
    require_prime(p)
    if n < 2:
        raise ValueError("tower base n must be at least 2")
    L = _length(params)
    _budget(n**L <= MAX_RADICAL_DEGREE, f"tower degree {n}^{L} exceeds {MAX_RADICAL_DEGREE}")
    elems = []
    for k in range(1, L + 1):
        f = tower_min_poly(p, n, k)
        # one Newton segment of slope b_k, whose denominator is the full degree
        elems.append(AlgebraicElement(f, label=f"{p}^({tower_exponent(n, k)})"))

    def pair(j, k, q):
        return tower_exponent(n, j) if q == p else None

    return SequenceSample(
        FamilyKind.NTH_ROOT_TOWER,
        {"p": p, "n": n, "len": L},
        elems,
        pair,
        lambda k, q: tower_exponent(n, k) if q == p else Fraction(0),
        f"s_k = {p}^(b_k), b_k = (1 - {n}^-k)/({n}-1); s_k^{n}/{p} = s_(k-1)",
        lambda q: Kind.CONVERGENT.value if q == p else Kind.NONE.value,
        lambda q: Fraction(1, n - 1) if q == p else None,
        IvpGenerator(RatPoly.monomial(n), p),
    )


def _prime_product_radicals(params: dict) -> SequenceSample:
    L = _length(params)
    _budget(L <= MAX_RADICAL_DEGREE, f"radical degree {L} exceeds {MAX_RADICAL_DEGREE}")
    primes = primes_up_to(400)[:L]
    elems = []
    for k in range(1, L + 1):
        P = prod(primes[:k])
        elems.append(AlgebraicElement(RatPoly.monomial(k) - P, label=f"({P})^(1/{k})"))

    def position(q):
        return primes.index(q) + 1 if q in primes else None

    def elem(k, q):
        n = position(q)
        return Fraction(0) if n is None or k < n else Fraction(1, k)

    def pair(j, k, q):
        a, b = elem(j, q), elem(k, q)
        if a == b:
            return None  # two units: no closed form
        return min(a, b)

    return SequenceSample(
        FamilyKind.PRIME_PRODUCT_RADICALS,
        {"len": L, "primes": list(primes)},
        elems,
        pair,
        elem,
        "s_k = (p_1 ... p_k)^(1/k); v_(p_n)(s_k) = 0 for k < n and 1/k for k >= n",
        lambda q: Kind.DIVERGENT.value if position(q) is not None else Kind.NONE.value,
        lambda q: Fraction(0),
        tail_hint=lambda q: position(q) or L + 1,
    )


def fcn_poly(c: int, n: int) -> RatPoly:
    """``X^n + c^3 X^(n-1) + c^2``."""
    if c < 2 or n < 2:
        raise ValueError("f_{c,n} needs c >= 2 and n >= 2")
    return RatPoly.monomial(n) + RatPoly.monomial(n - 1, c**3) + c**2


def _fcn_family(params: dict) -> SequenceSample:
    c = int(params.get("c", 2))
    if c < 2:
        raise ValueError("c must be at least 2")
    if "ns" in params:
        ns = tuple(int(n) for n in params["ns"])
    else:
        L = _length(params)
        ns = tuple(q for q in primes_up_to(MAX_RADICAL_DEGREE) if c % q)[:L]
    if any(n < 2 for n in ns):
        raise ValueError("degrees must be at least 2")
    if list(ns) != sorted(set(ns)):
        raise ValueError("degrees must be strictly increasing")
    _budget(max(ns) <= MAX_RADICAL_DEGREE, f"degree {max(ns)} exceeds {MAX_RADICAL_DEGREE}")
    elems = []
    for n in ns:
        f = fcn_poly(c, n)
        assert perron_irreducible(f)
        elems.append(AlgebraicElement(f, certificate="perron", label=f"root of f_({c},{n})"))

    def elem(k, q):
        v = v_p(c, q)
        return Fraction(2 * v, ns[k - 1]) if v else None

    def pair(j, k, q):
        a, b = elem(j, q), elem(k, q)
        if a is None or a == b:
            return None
        return min(a, b)

    return SequenceSample(
        FamilyKind.FCN_FAMILY,
        {"c": c, "ns": ns, "len": len(ns)},
        elems,
        pair,
        elem,
        f"roots of X^n + c^3 X^(n-1) + c^2 with c = {c}; v_p(root) = 2 v_p(c)/n for p | c",
        lambda q: Kind.DIVERGENT.value if c % q == 0 else Kind.NONE.value,
        lambda q: Fraction(0) if c % q == 0 else None,
    )


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def quadratic_integers(height: int = 10) -> list[AlgebraicElement]:
    """Every root class of an irreducible ``X^2 + bX + c`` with ``|b|, |c| <= height``."""
    out = []
    for b in range(-height, height + 1):
        for c in range(-height, height + 1):
            if not _is_square(b * b - 4 * c):
                out.append(AlgebraicElement(RatPoly((c, b, 1)), certificate="nonsquare-discriminant", label=f"x^2{b:+d}x{c:+d}"))
    return out


def integer_corpus(
    count: int = 60, max_degree: int = 4, height: int = 10, seed: int = CORPUS_SEED
) -> list[AlgebraicElement]:
    """Distinct algebraic integers with certified irreducible minimal polynomials.

    Degrees are cycled from 1 to ``max_degree`` and coefficients drawn
    uniformly from ``[-height, height]``; uncertified draws are discarded.
    """
    rng = random.Random(seed)
    seen: set = set()
    out: list[AlgebraicElement] = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 200 * count:
            raise RuntimeError("corpus generation stalled")
        deg = 1 + len(out) % max_degree
        coeffs = tuple(rng.randint(-height, height) for _ in range(deg)) + (1,)
        if coeffs in seen:
            continue
        if deg > 1 and coeffs[0] == 0:
            continue
        f = RatPoly(coeffs)
        try:
            cert = certify_irreducible(f)
        except ReducibleError:
            continue
        if cert == "unchecked":
            continue
        seen.add(coeffs)
        out.append(AlgebraicElement(f, certificate=cert, label=str(f)))
    return out


def scale_min_poly(f: RatPoly, d: int) -> RatPoly:
    """Minimal polynomial of ``d * a`` from that of ``a``: ``a_i -> a_i d^(n-i)``."""
    n = f.degree
    return RatPoly([c * d ** (n - i) for i, c in enumerate(f.coeffs)])


def _scaled_ring(params: dict) -> SequenceSample:
    d = int(params.get("d", 2))
    if d < 2:
        raise ValueError("scale d must be at least 2")
    count = int(params.get("len", params.get("count", 60)))
    seed = int(params.get("seed", CORPUS_SEED))
    base = integer_corpus(count, int(params.get("max_degree", 4)), int(params.get("height", 10)), seed)
    elems = [
        AlgebraicElement(scale_min_poly(e.min_poly, d), certificate=e.certificate, label=f"{d}*({e.label})")
        for e in base
    ]
    return SequenceSample(
        FamilyKind.SCALED_RING,
        {"d": d, "len": count, "seed": seed},
        elems,
        lambda j, k, q: None,
        lambda k, q: None,
        f"{d} times a sampled corpus of algebraic integers of degree <= 4, height <= 10",
        lambda q: Kind.NONE.value,
        generator=IvpGenerator(X, d),
    )


_BUILDERS = {
    FamilyKind.ROOTS_OF_UNITY_P_POWER: _roots_of_unity_p_power,
    FamilyKind.ROOTS_OF_UNITY_PRIMES: _roots_of_unity_primes,
    FamilyKind.NTH_ROOT_TOWER: _nth_root_tower,
    FamilyKind.PRIME_PRODUCT_RADICALS: _prime_product_radicals,
    FamilyKind.FCN_FAMILY: _fcn_family,
    FamilyKind.SCALED_RING: _scaled_ring,
}


def make_family(kind, params: dict | None = None) -> SequenceSample:
    return _BUILDERS[FamilyKind.parse(kind)](dict(params or {}))


def geometric_partial_sums(p: int, length: int) -> ValuationMatrix:
    """``s_k = sum_{i <= k} p^i`` (k from 0): ``v(s_j - s_k) = min(j, k) + 1``."""
    require_prime(p)
    return ValuationMatrix.from_function(length, lambda j, k: Fraction(j + 1))


# ---------------------------------------------------------------------------
# cross-checks and verdicts
# ---------------------------------------------------------------------------


@dataclass
class CrosscheckItem:
    what: str
    expected: Val
    computed: Counter
    skipped: bool = False

    @property
    def agrees(self) -> bool:
        return self.skipped or set(self.computed) == {self.expected}

    def to_json(self) -> dict:
        return {
            "what": self.what,
            "expected": val_str(self.expected),
            "computed": multiset_json(self.computed),
            "agrees": self.agrees,
            "skipped": self.skipped,
        }


@dataclass
class FamilyCrosscheck:
    kind: FamilyKind
    prime: int
    items: list[CrosscheckItem] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(i.agrees for i in self.items)

    @property
    def checked(self) -> int:
        return sum(not i.skipped for i in self.items)

    def discrepancies(self) -> list[CrosscheckItem]:
        return [i for i in self.items if not i.agrees]

    def to_json(self) -> dict:
        return {
            "kind": self.kind.value,
            "prime": self.prime,
            "ok": self.ok,
            "checked": self.checked,
            "items": [i.to_json() for i in self.items],
        }


def crosscheck_family(sample: SequenceSample, p: int, budget: int = CROSSCHECK_BUDGET) -> FamilyCrosscheck:
    """Recompute formula valuations from minimal polynomials over all conjugates.

    Pairs whose degree product exceeds ``budget`` are listed as skipped.
    """
    require_prime(p)
    rep = FamilyCrosscheck(sample.kind, p)
    els = sample.elements
    for k, e in enumerate(els, 1):
        v = sample.elem_formula(k, p)
        if v is None:
            continue
        rep.items.append(CrosscheckItem(f"v(s_{k})", v, element_valuations(e, p)))
    for j in range(1, len(els) + 1):
        for k in range(j + 1, len(els) + 1):
            v = sample.val_formula(j, k, p)
            if v is None:
                continue
            a, b = els[j - 1], els[k - 1]
            if a.degree * b.degree > budget:
                rep.items.append(CrosscheckItem(f"v(s_{j} - s_{k})", v, Counter(), skipped=True))
                continue
            rep.items.append(CrosscheckItem(f"v(s_{j} - s_{k})", v, difference_valuations(a.min_poly, b.min_poly, p)))
    return rep


@dataclass
class FamilyVerdict:
    report: ClassificationReport
    indices: list[int]
    conclusion: str  # "trivial" | "nontrivial"
    mechanism: str
    evidence: list[str] = field(default_factory=list)
    evidence_ok: bool = True

    def to_json(self) -> dict:
        return {
            "classification": self.report.to_json(),
            "indices": self.indices,
            "conclusion": self.conclusion,
            "mechanism": self.mechanism,
            "evidence": self.evidence,
            "evidence_ok": self.evidence_ok,
        }


def _generator_evidence(sample: SequenceSample) -> tuple[list[str], bool]:
    g = sample.generator
    lines, ok = [], True
    for e in sample.elements:
        good = is_integral_value(e.apply(g.f), g.d)
        ok &= good
        lines.append(f"{e.label}: ({g.f})/{g.d} integral = {good}")
    return lines, ok


def _index_evidence(sample: SequenceSample) -> tuple[list[str], bool]:
    lines, ok = [], True
    for e in sample.elements:
        if e.degree > 64:
            lines.append(f"{e.label}: skipped (degree {e.degree})")
            continue
        rep = index_one_certificate(e.min_poly)
        ok &= rep.index_is_one is TriState.YES
        lines.append(f"{e.label}: index one = {rep.index_is_one.value}")
    return lines, ok


def family_verdict(sample: SequenceSample, p: int) -> FamilyVerdict:
    """Classify the formula matrix at p and attach the global conclusion with its mechanism."""
    require_prime(p)
    start = max(sample.tail_start(p), sample.tail_hint(p))
    idx = list(range(start, len(sample) + 1))
    m = sample.formula_matrix(p, idx)
    if m is None:
        report = ClassificationReport(Kind.NONE, prefix_length=len(idx), reason=f"no closed-form valuations at {p}")
    else:
        report = classify_prefix(m, limit=sample.gauge_limit(p))
        if start > 1 and report.kind is not Kind.NONE:
            report.reason = f"eventually, from s_{start}"
    kind = sample.kind
    if kind in (FamilyKind.NTH_ROOT_TOWER, FamilyKind.SCALED_RING):
        ev, ok = _generator_evidence(sample)
        return FamilyVerdict(report, idx, "nontrivial", "explicit generator", ev, ok)
    if kind in (FamilyKind.ROOTS_OF_UNITY_P_POWER, FamilyKind.ROOTS_OF_UNITY_PRIMES):
        ev, ok = _index_evidence(sample)
        return FamilyVerdict(report, idx, "trivial", "index-1 witness", ev, ok)
    if kind is FamilyKind.FCN_FAMILY:
        c = sample.params["c"]
        ev, ok = [], True
        for n, e in zip(sample.params["ns"], sample.elements):
            for q in sorted({q for q in primes_up_to(max(c, n)) if c % q == 0 or n % q == 0}):
                div, _ = dedekind_divides_index(e.min_poly, q)
                ok &= div == (c % q == 0)
                ev.append(f"f_({c},{n}): {q} divides index = {div}")
        return FamilyVerdict(report, idx, "trivial", "pseudo-divergent-to-zero", ev, ok)
    return FamilyVerdict(report, idx, "trivial", "pseudo-divergent-to-zero", [], True)
