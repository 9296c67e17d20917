"""Polynomial closure in the algebraic integers, tested elementwise.

``S(f, d)`` is the set of all roots of ``f(X) - d*b`` as ``b`` ranges over
the algebraic integers, so ``a`` lies in it exactly when ``f(a)/d`` is an
algebraic integer.  The closure of a set is the intersection of these over
a generator list supplied by the caller.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .exact import AlgebraicElement, binomial_poly
from .ivptests import BudgetExceeded, IvpGenerator, integral_value_charpoly, is_integral_value
from .poly import RatPoly

Z_WITNESS_BUDGET = 64


def in_Sfd(e: AlgebraicElement, gen: IvpGenerator) -> bool:
    if gen.d == 1:
        return True
    return is_integral_value(e.apply(gen.f), gen.d)


def closure_member(gens: Iterable[IvpGenerator], e: AlgebraicElement) -> bool:
    """Membership in the intersection of ``S(f, d)`` over gens with ``d >= 2``.

    The empty intersection is everything.
    """
    return all(in_Sfd(e, g) for g in gens if g.d >= 2)


@dataclass(frozen=True)
class ZWitness:
    k: int
    char_poly: RatPoly  # of binomial(e, k), not integral

    def to_json(self) -> dict:
        return {"k": self.k, "char_poly": str(self.char_poly)}


def z_closure_witness(e: AlgebraicElement, k_max: int) -> ZWitness | None:
    """Smallest ``k <= k_max`` with ``binomial(e, k)`` not an algebraic integer.

    ``None`` means no witness within the budget, not membership in the
    closure of Z.
    """
    if k_max < 1:
        raise ValueError("k_max must be positive")
    if k_max * e.degree > Z_WITNESS_BUDGET:
        raise BudgetExceeded(f"k_max * degree = {k_max * e.degree} exceeds {Z_WITNESS_BUDGET}")
    for k in range(1, k_max + 1):
        cp = integral_value_charpoly(e.apply(binomial_poly(k)))
        if not cp.is_integral():
            return ZWitness(k, cp)
    return None


def load_generators(obj) -> list[IvpGenerator]:
    """Generators from JSON data ``[{"f": "x", "d": 2}, ...]``."""
    return [IvpGenerator.from_json(g) for g in obj]


__all__ = [
    "IvpGenerator",
    "ZWitness",
    "closure_member",
    "in_Sfd",
    "load_generators",
    "z_closure_witness",
]
