"""Exact arithmetic over Z, Q and F_p.

Resultants, discriminants, factorization modulo p, irreducibility
certificates, and characteristic polynomials of algebraic elements.

Sign convention for resultants: ``Res(f, g) = lc(f)**deg(g) * prod g(a)``
over the roots ``a`` of ``f`` (with multiplicity).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, isqrt

from .intfact import factor_integer, primes_up_to, require_prime, v_p
from .poly import X, FpPoly, RatPoly, as_ratpoly, fp_gcd, poly_gcd

DEFAULT_SEED = 20240917


# ---------------------------------------------------------------------------
# resultants and discriminants
# ---------------------------------------------------------------------------


def resultant(f: RatPoly, g: RatPoly) -> Fraction:
    """Exact resultant over Q by the Euclidean recursion."""
    f, g = as_ratpoly(f), as_ratpoly(g)
    if f.is_zero() or g.is_zero():
        raise ValueError("resultant of a zero polynomial is undefined")
    acc = Fraction(1)
    while True:
        n, m = f.degree, g.degree
        if n == 0:
            return acc * f.lc**m
        if m == 0:
            return acc * g.lc**n
        r = g % f
        if r.is_zero():
            return Fraction(0)
        # Res(f, g) = lc(f)^(m - deg r) * Res(f, r) = lc(f)^(m - deg r) * (-1)^(n deg r) * Res(r, f)
        acc *= f.lc ** (m - r.degree)
        if (n * r.degree) % 2:
            acc = -acc
        f, g = r, f


def discriminant(f: RatPoly) -> Fraction:
    f = as_ratpoly(f)
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return Fraction(1)
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(f, f.derivative()) / f.lc


def is_squarefree(f: RatPoly) -> bool:
    return poly_gcd(f, f.derivative()).degree == 0


# ---------------------------------------------------------------------------
# power sums, Newton identities, characteristic polynomials
# ---------------------------------------------------------------------------


def _monic_coeffs(f: RatPoly) -> list:
    """Ascending coefficients of the monic associate, as ints when possible."""
    g = f.monic()
    return [c.numerator if c.denominator == 1 else c for c in g.coeffs]


def power_sums(f: RatPoly, k_max: int) -> list:
    """``[P_0, ..., P_k_max]`` where ``P_k`` is the sum of k-th powers of the roots."""
    a = _monic_coeffs(f)
    n = len(a) - 1
    ps = [n]
    for k in range(1, k_max + 1):
        s = -k * a[n - k] if k <= n else 0
        for i in range(1, min(k - 1, n) + 1):
            s -= a[n - i] * ps[k - i]
        ps.append(s)
    return ps


def _exact_div(s, k: int):
    if isinstance(s, int) and s % k == 0:
        return s // k
    return Fraction(s) / k


def poly_from_power_sums(ps: list, n: int) -> RatPoly:
    """Monic degree-n polynomial whose roots have power sums ``ps[1..n]``."""
    e = [1]
    for k in range(1, n + 1):
        s = 0
        for i in range(1, k + 1):
            term = e[k - i] * ps[i]
            s = s + term if i % 2 else s - term
        e.append(_exact_div(s, k))
    return RatPoly([(-1) ** (n - i) * e[n - i] for i in range(n + 1)])


def _mulmod(a: list, b: list, f: list) -> list:
    """Product of integer/rational coefficient lists reduced modulo monic ``f``."""
    n = len(f) - 1
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    for k in range(len(out) - 1, n - 1, -1):
        c = out[k]
        if c:
            out[k] = 0
            base = k - n
            for j in range(n):
                if f[j]:
                    out[base + j] -= c * f[j]
    del out[n:]
    return out


def char_poly_from(min_poly: RatPoly, expr: RatPoly) -> RatPoly:
    """Characteristic polynomial of ``expr(a)`` over the roots ``a`` of ``min_poly``.

    Equal to ``Res_Y(min_poly(Y), X - expr(Y))`` made monic; computed from
    traces of powers of ``expr`` in ``Q[Y]/(min_poly)`` and Newton identities.
    """
    f = _monic_coeffs(min_poly)
    n = len(f) - 1
    h = expr % min_poly
    den = h.denominator()
    H = [c.numerator * (den // c.denominator) for c in h.coeffs]
    P = power_sums(min_poly, n - 1) if n > 1 else [n]
    traces = [n]
    cur = [1]
    for _ in range(n):
        cur = _mulmod(cur, H, f)
        traces.append(sum(c * P[t] for t, c in enumerate(cur) if c))
    cp = poly_from_power_sums(traces, n)
    if den == 1:
        return cp
    return RatPoly([c / Fraction(den) ** (n - i) for i, c in enumerate(cp.coeffs)])


def difference_poly(f: RatPoly, g: RatPoly) -> RatPoly:
    """Monic polynomial whose roots are ``b - a`` for all roots a of f, b of g.

    Same root multiset as ``Res_Y(f(Y), g(X + Y))``; built from power sums.
    """
    f, g = as_ratpoly(f), as_ratpoly(g)
    n, m = f.degree, g.degree
    N = n * m
    Pf = power_sums(f, N)
    Pg = power_sums(g, N)
    ps = [N]
    row = [1]
    for k in range(1, N + 1):
        row = [1] + [row[i - 1] + row[i] for i in range(1, k)] + [1]
        s = 0
        for i in range(k + 1):
            t = row[i] * Pg[i] * Pf[k - i]
            s = s - t if (k - i) % 2 else s + t
        ps.append(s)
    return poly_from_power_sums(ps, N)


# ---------------------------------------------------------------------------
# factorization over F_p
# ---------------------------------------------------------------------------


def _pth_root(f: FpPoly) -> FpPoly:
    p = f.p
    return FpPoly(p, f.coeffs[::p])


def squarefree_decomposition(f: FpPoly) -> dict[FpPoly, int]:
    """Monic ``f`` as ``prod g_i**i`` with squarefree, pairwise coprime ``g_i``."""
    p = f.p
    out: dict[FpPoly, int] = {}

    def add(g, e):
        if g.degree > 0:
            out[g] = out.get(g, 0) + e

    df = f.derivative()
    if df.is_zero():
        for g, e in squarefree_decomposition(_pth_root(f)).items():
            add(g, e * p)
        return out
    c = fp_gcd(f, df)
    w = f // c
    i = 1
    while w.degree > 0:
        y = fp_gcd(w, c)
        add((w // y).monic(), i)
        w, c = y, c // y
        i += 1
    if c.degree > 0:
        for g, e in squarefree_decomposition(_pth_root(c.monic())).items():
            add(g, e * p)
    return out


def distinct_degree(f: FpPoly) -> list[tuple[FpPoly, int]]:
    """Split squarefree monic ``f`` into products of equal-degree irreducibles."""
    p = f.p
    x = FpPoly(p, [0, 1])
    out = []
    h = x
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = h.powmod(p, f)
        g = fp_gcd(f, h - x)
        if g.degree > 0:
            out.append((g, d))
            f = f // g
            h = h % f
    if f.degree > 0:
        out.append((f.monic(), f.degree))
    return out


def equal_degree(f: FpPoly, d: int, rng: random.Random) -> list[FpPoly]:
    """Cantor-Zassenhaus splitting of a product of degree-d irreducibles."""
    if f.degree == d:
        return [f.monic()]
    p = f.p
    n = f.degree
    while True:
        a = FpPoly(p, [rng.randrange(p) for _ in range(n)])
        if a.degree <= 0:
            continue
        if p == 2:
            t = a % f
            acc = t
            for _ in range(d - 1):
                t = (t * t) % f
                acc = acc + t
            b = acc
        else:
            b = a.powmod((p**d - 1) // 2, f) - FpPoly(p, [1])
        g = fp_gcd(f, b)
        if 0 < g.degree < n:
            return equal_degree(g, d, rng) + equal_degree(f // g, d, rng)


def factor_mod_p(f, p: int, seed: int = DEFAULT_SEED) -> list[tuple[FpPoly, int]]:
    """Irreducible factorization of ``f mod p`` as sorted ``(monic factor, exponent)`` pairs.

    The leading unit is dropped.  Factors are sorted by ``(degree, coefficients)``.
    """
    require_prime(p)
    fb = f if isinstance(f, FpPoly) else FpPoly.from_ratpoly(as_ratpoly(f), p)
    if fb.is_zero():
        raise ValueError(f"polynomial vanishes modulo {p}")
    fb = fb.monic()
    rng = random.Random(seed)
    result: list[tuple[FpPoly, int]] = []
    for g, e in squarefree_decomposition(fb).items():
        for h, d in distinct_degree(g):
            for irr in equal_degree(h, d, rng):
                result.append((irr, e))
    result.sort(key=lambda t: t[0].sort_key())
    return result


def is_irreducible_mod_p(f: FpPoly) -> bool:
    if f.degree <= 0:
        return False
    fs = factor_mod_p(f, f.p)
    return len(fs) == 1 and fs[0][1] == 1


# ---------------------------------------------------------------------------
# irreducibility over Q
# ---------------------------------------------------------------------------


def perron_irreducible(f) -> bool:
    """Perron's sufficient condition ``|a_{n-1}| > 1 + |a_{n-2}| + ... + |a_0|``.

    False means inconclusive, not reducible.
    """
    f = as_ratpoly(f)
    if not f.is_monic() or not f.is_integral():
        raise ValueError("Perron's criterion needs a monic integer polynomial")
    if f.degree < 2 or f[0] == 0:
        raise ValueError("Perron's criterion needs degree >= 2 and f(0) != 0")
    a = f.int_coeffs()
    n = f.degree
    return abs(a[n - 1]) > 1 + sum(abs(c) for c in a[: n - 1])


class ReducibleError(ValueError):
    """Raised when an element's minimal polynomial is found to factor over Q."""


def _divisors(n: int, limit: int = 20000) -> list[int] | None:
    fac = factor_integer(n, trial_bound=10**5, rho_iterations=20000)
    if not fac.complete:
        return None
    divs = [1]
    for p, e in fac.factors.items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
        if len(divs) > limit:
            return None
    return sorted(divs)


def _has_integer_root(a: list[int]) -> bool | None:
    divs = _divisors(a[0])
    if divs is None:
        return None
    f = RatPoly(a)
    return any(f(s * d) == 0 for d in divs for s in (1, -1))


def _quartic_splits(a: list[int]) -> bool | None:
    """Does monic integer quartic ``a`` factor as a product of two integer quadratics?"""
    c0, c1, c2, c3 = a[:4]
    divs = _divisors(c0)
    if divs is None:
        return None
    for d in divs:
        for v in (d, -d):
            z = c0 // v
            s2 = c3 * c3 - 4 * (c2 - v - z)
            if s2 < 0:
                continue
            s = isqrt(s2)
            if s * s != s2 or (c3 + s) % 2:
                continue
            for u in ((c3 + s) // 2, (c3 - s) // 2):
                w = c3 - u
                if u * z + v * w == c1:
                    return True
    return False


def _single_segment_at(f: RatPoly, p: int) -> bool:
    """Newton polygon at p is one segment whose slope has denominator deg f."""
    a = f.int_coeffs()
    n = len(a) - 1
    v0 = v_p(a[0], p)
    if v0 is None or v0 == 0:
        return False
    # every interior point must lie on or above the chord from (0, v0) to (n, 0)
    for i in range(1, n):
        vi = v_p(a[i], p)
        if vi is not None and vi * n < v0 * (n - i):
            return False
    return Fraction(v0, n).denominator == n


def certify_irreducible(f, max_primes: int = 40) -> str:
    """Return a certificate tag, or ``"unchecked"`` when no test applies.

    Raises :class:`ReducibleError` when a factor is exhibited.
    """
    f = as_ratpoly(f)
    if not f.is_monic() or not f.is_integral():
        raise ValueError("expected a monic integer polynomial")
    n = f.degree
    if n < 1:
        raise ValueError("constant polynomial")
    if n == 1:
        return "linear"
    a = f.int_coeffs()
    if a[0] == 0:
        raise ReducibleError(f"{f} is divisible by x")
    if perron_irreducible(f):
        return "perron"
    for p in primes_up_to(1000):
        if abs(a[0]) < p:
            break
        if a[0] % p == 0 and _single_segment_at(f, p):
            return f"newton-polygon({p})"
    # the same test after x -> x + s catches cyclotomic polynomials
    for s in (1, -1):
        g = f.shift(s)
        g0 = abs(g.int_coeffs()[0])
        if g0 == 0:
            raise ReducibleError(f"{f} has the root {s}")
        for p in primes_up_to(1000):
            if g0 < p:
                break
            if g0 % p == 0 and _single_segment_at(g, p):
                return f"newton-polygon({p}, x{s:+d})"
    # degrees of Q-factors must be subset sums of every good reduction's degree pattern
    allowed = set(range(1, n // 2 + 1))
    used = []
    for p in primes_up_to(400):
        if len(used) >= max_primes or not allowed:
            break
        fb = FpPoly.from_ratpoly(f, p)
        if fp_gcd(fb, fb.derivative()).degree > 0:
            continue
        degs = [g.degree for g, _ in factor_mod_p(fb, p)]
        sums = {0}
        for d in degs:
            sums |= {s + d for s in sums}
        before = set(allowed)
        allowed &= sums
        if allowed != before or not used:
            used.append(p)
    if not allowed:
        return "modp-degrees(" + ",".join(map(str, used)) + ")"
    tags = []
    if 1 in allowed:
        root = _has_integer_root(a)
        if root is None:
            return "unchecked"
        if root:
            raise ReducibleError(f"{f} has a rational root")
        allowed.discard(1)
        tags.append("rational-root")
    if allowed == {2} and n == 4:
        split = _quartic_splits(a)
        if split is None:
            return "unchecked"
        if split:
            raise ReducibleError(f"{f} is a product of two quadratics")
        allowed.clear()
        tags.append("quadratic-pairs")
    if allowed:
        return "unchecked"
    return "+".join(tags)


# ---------------------------------------------------------------------------
# algebraic elements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AlgebraicElement:
    """The number ``expr(a)`` for ``a`` a root of the monic integer polynomial ``min_poly``.

    All derived data ranges over every root of ``min_poly``, so an element
    stands for its whole conjugate multiset.
    """

    min_poly: RatPoly
    expr: RatPoly = X
    certificate: str | None = None
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        m = as_ratpoly(self.min_poly)
        e = as_ratpoly(self.expr)
        if m.degree < 1 or not m.is_monic() or not m.is_integral():
            raise ValueError(f"minimal polynomial must be monic with integer coefficients, got {m}")
        object.__setattr__(self, "min_poly", m)
        object.__setattr__(self, "expr", e)
        if self.certificate is None:
            object.__setattr__(self, "certificate", certify_irreducible(m))

    @property
    def degree(self) -> int:
        return self.min_poly.degree

    @property
    def checked(self) -> bool:
        return self.certificate != "unchecked"

    @classmethod
    def integer(cls, m: int) -> AlgebraicElement:
        return cls(RatPoly((-m, 1)), certificate="linear", label=str(m))

    def with_expr(self, expr) -> AlgebraicElement:
        return AlgebraicElement(self.min_poly, as_ratpoly(expr) % self.min_poly, self.certificate, self.label)

    def apply(self, g) -> AlgebraicElement:
        """The element ``g(self)``, reduced modulo the minimal polynomial."""
        g = as_ratpoly(g)
        return self.with_expr(g.compose(self.expr, self.min_poly))

    def scaled(self, c) -> AlgebraicElement:
        return self.with_expr(self.expr.scale(c))

    def to_json(self) -> dict:
        return {
            "min_poly": str(self.min_poly),
            "expr": str(self.expr),
            "certificate": self.certificate,
            "label": self.label,
        }


def char_poly_of_element(e: AlgebraicElement) -> RatPoly:
    return char_poly_from(e.min_poly, e.expr)


# ---------------------------------------------------------------------------
# cyclotomic polynomials
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> RatPoly:
    """Phi_m by exact division of ``X^m - 1`` by the Phi_d, d | m, d < m."""
    if m < 1:
        raise ValueError("cyclotomic index must be positive")
    f = RatPoly.monomial(m) - 1
    for d in range(1, m):
        if m % d == 0:
            q, r = divmod(f, cyclotomic(d))
            assert r.is_zero()
            f = q
    return f


def binomial_poly(k: int) -> RatPoly:
    """``X(X-1)...(X-k+1)/k!``."""
    f = RatPoly((1,))
    for i in range(k):
        f = f * RatPoly((-i, 1))
    return f / factorial(k)


__all__ = [
    "AlgebraicElement",
    "ReducibleError",
    "binomial_poly",
    "certify_irreducible",
    "char_poly_from",
    "char_poly_of_element",
    "cyclotomic",
    "difference_poly",
    "discriminant",
    "factor_mod_p",
    "is_irreducible_mod_p",
    "is_squarefree",
    "perron_irreducible",
    "power_sums",
    "resultant",
]
