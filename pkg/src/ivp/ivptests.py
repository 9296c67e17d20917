"""Distinguished integral-valued polynomials and integrality of values.

Integrality of ``f(a)/d`` is decided through the characteristic polynomial
of the value over all conjugates of ``a``: the value is an algebraic integer
exactly when that monic polynomial has integer coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import factorial

from .dedekind import IndexReport, dedekind_divides_index
from .exact import DEFAULT_SEED, AlgebraicElement, char_poly_from, factor_mod_p
from .intfact import factor_integer, require_prime
from .poly import FpPoly, RatPoly, X, as_ratpoly, fp_gcd

PSI_LCM_BOUND = 81
MAX_F0 = 4
MAX_Q = 3**6


class BudgetExceeded(ValueError):
    pass


def psi(p: int, n: int) -> RatPoly:
    """``(X^(p^n) - X)(X^(p^(n-1)) - X) ... (X^p - X)``."""
    require_prime(p)
    if n < 1:
        raise ValueError("n must be positive")
    out = RatPoly((1,))
    for k in range(1, n + 1):
        out = out * (RatPoly.monomial(p**k) - X)
    return out


def _fp_lcm(a: FpPoly, b: FpPoly) -> FpPoly:
    return ((a * b) // fp_gcd(a, b)).monic()


def brute_force_lcm(p: int, n: int) -> FpPoly:
    """lcm of every monic polynomial of degree <= n over F_p, by enumeration."""
    acc = FpPoly(p, [1])
    for d in range(1, n + 1):
        for tail in product(range(p), repeat=d):
            acc = _fp_lcm(acc, FpPoly(p, list(tail) + [1]))
    return acc


def psi_lcm_oracle(p: int, n: int) -> bool:
    require_prime(p)
    if p**n > PSI_LCM_BOUND:
        raise BudgetExceeded(f"p^n = {p**n} exceeds the enumeration bound {PSI_LCM_BOUND}")
    return brute_force_lcm(p, n) == FpPoly.from_ratpoly(psi(p, n), p)


def integral_value_charpoly(e: AlgebraicElement, d: int = 1) -> RatPoly:
    """Characteristic polynomial of ``e/d`` over all conjugates."""
    if d == 0:
        raise ZeroDivisionError("d must be nonzero")
    return char_poly_from(e.min_poly, e.expr / d)


def is_integral_value(e: AlgebraicElement, d: int = 1) -> bool:
    return integral_value_charpoly(e, d).is_integral()


def psi_membership_check(p: int, n: int, e: AlgebraicElement) -> bool:
    """Is ``psi(p, n)(e) / p`` an algebraic integer?"""
    return is_integral_value(e.apply(psi(p, n)), p)


@dataclass
class SplittingReport:
    min_poly: RatPoly
    prime: int
    index_ok: bool
    pairs: list[tuple[int, int]] = field(default_factory=list)
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "min_poly": str(self.min_poly),
            "prime": self.prime,
            "index_ok": self.index_ok,
            "pairs": [list(t) for t in self.pairs],
            "reason": self.reason,
        }


def kummer_splitting(f, p: int, seed: int = DEFAULT_SEED) -> SplittingReport:
    """``(e, f)`` of the primes above p, read off ``f mod p`` when p does not divide the index."""
    f = as_ratpoly(f)
    divides, _ = dedekind_divides_index(f, p, seed=seed)
    if divides:
        return SplittingReport(f, p, False, [], "index obstruction")
    pairs = [(e, g.degree) for g, e in factor_mod_p(f, p, seed=seed)]
    pairs.sort()
    return SplittingReport(f, p, True, pairs)


@dataclass(frozen=True)
class IvpGenerator:
    """The integral-valued polynomial ``f / d`` with ``f`` monic in Z[X]."""

    f: RatPoly
    d: int

    def __post_init__(self):
        f = as_ratpoly(self.f)
        if f.degree < 1 or not f.is_monic() or not f.is_integral():
            raise ValueError(f"generator numerator must be monic, nonconstant, integral: {f}")
        if not isinstance(self.d, int) or self.d < 1:
            raise ValueError("generator denominator must be a positive integer")
        object.__setattr__(self, "f", f)

    @property
    def polynomial(self) -> RatPoly:
        return self.f / self.d

    def to_json(self) -> dict:
        return {"f": str(self.f), "d": self.d}

    @classmethod
    def from_json(cls, obj: dict) -> IvpGenerator:
        return cls(as_ratpoly(obj["f"]), int(obj["d"]))


def ef_bound_generator(p: int, e0: int, f0: int, max_q: int = MAX_Q) -> IvpGenerator:
    """``((X^q - X)^e0, p)`` with ``q = p^(f0!)``."""
    require_prime(p)
    if e0 < 1 or f0 < 1:
        raise ValueError("e0 and f0 must be positive")
    if f0 > MAX_F0:
        raise BudgetExceeded(f"f0 = {f0} exceeds {MAX_F0}")
    q = p ** factorial(f0)
    if q > max_q:
        raise BudgetExceeded(f"q = {q} exceeds {max_q}")
    return IvpGenerator((RatPoly.monomial(q) - X) ** e0, p)


class ForcedPrimes:
    """All primes except ``excluded`` and except divisors of ``unresolved``."""

    def __init__(self, excluded=(), unresolved: int = 1):
        self.excluded = frozenset(excluded)
        self.unresolved = unresolved

    def __contains__(self, q: int) -> bool:
        return q not in self.excluded and (self.unresolved == 1 or self.unresolved % q != 0)

    def __eq__(self, other):
        return (
            isinstance(other, ForcedPrimes)
            and self.excluded == other.excluded
            and self.unresolved == other.unresolved
        )

    def __repr__(self):
        if not self.excluded and self.unresolved == 1:
            return "ForcedPrimes(all)"
        return f"ForcedPrimes(all except {sorted(self.excluded)}, unresolved={self.unresolved})"


@dataclass
class IntegralityConstraint:
    forced: ForcedPrimes
    violations: tuple[int, ...]
    vacuous: bool

    @property
    def contradiction(self) -> bool:
        """f has a forced prime in a denominator, so f(a) cannot be integral."""
        return bool(self.violations)

    def __contains__(self, q: int) -> bool:
        return q in self.forced


def lemma43_constraint(f, e: AlgebraicElement, index_report: IndexReport) -> IntegralityConstraint:
    """Primes at which an ``f`` integral at ``e`` must have integral coefficients.

    If ``deg f < deg e`` and ``f(e)`` is integral then ``index * f`` lies in
    Z[X], so f is q-integral for every q not dividing the index.
    """
    f = as_ratpoly(f)
    if f.degree >= e.degree:
        raise ValueError("f must have degree below the degree of the element")
    forced = ForcedPrimes(index_report.divisors(), index_report.unfactored_part)
    den = f.denominator()
    if den == 1:
        return IntegralityConstraint(forced, (), True)
    bad = tuple(q for q in factor_integer(den).factors if q in forced)
    return IntegralityConstraint(forced, bad, False)

