"""Prime divisors of the index [O_K : Z[a]] via Dedekind's criterion."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .exact import DEFAULT_SEED, discriminant, factor_mod_p, is_squarefree
from .intfact import RHO_ITERATIONS, TRIAL_BOUND, factor_integer, require_prime
from .poly import FpPoly, RatPoly, as_ratpoly


class TriState(str, enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


def _check_minpoly(f: RatPoly) -> RatPoly:
    f = as_ratpoly(f)
    if not f.is_monic() or not f.is_integral() or f.degree < 1:
        raise ValueError(f"expected a monic integer polynomial, got {f}")
    if not is_squarefree(f):
        raise ValueError(f"{f} has a repeated root over Q")
    return f


def dedekind_divides_index(f, p: int, seed: int = DEFAULT_SEED) -> tuple[bool, FpPoly | None]:
    """Decide whether p divides the index of a root of ``f``.

    Returns ``(divides, witness)`` where the witness is a repeated factor of
    ``f mod p`` dividing ``F mod p``.  The lifts are the canonical ones with
    coefficients in ``[0, p)``.
    """
    f = _check_minpoly(f)
    require_prime(p)
    factors = factor_mod_p(f, p, seed=seed)
    prod = RatPoly((1,))
    for pi, e in factors:
        prod = prod * pi.lift() ** e
    diff = f - prod
    F = RatPoly([c / p for c in diff.coeffs])
    assert F.is_integral()
    Fbar = FpPoly.from_ratpoly(F, p)
    for pi, e in factors:
        if e >= 2 and (Fbar % pi).is_zero():
            return True, pi
    return False, None


@dataclass
class PrimeTest:
    p: int
    divides: bool
    witness: FpPoly | None = None

    def to_json(self) -> dict:
        return {
            "p": str(self.p),
            "divides": self.divides,
            "witness": None if self.witness is None else str(self.witness),
        }


@dataclass
class IndexReport:
    min_poly: RatPoly
    disc: int
    tested_primes: list[PrimeTest] = field(default_factory=list)
    index_is_one: TriState = TriState.UNKNOWN
    unfactored_part: int = 1

    def divisors(self) -> list[int]:
        """Primes known to divide the index."""
        return [t.p for t in self.tested_primes if t.divides]

    def to_json(self) -> dict:
        return {
            "min_poly": str(self.min_poly),
            "disc": str(self.disc),
            "tested_primes": [t.to_json() for t in self.tested_primes],
            "index_is_one": self.index_is_one.value,
            "unfactored_part": str(self.unfactored_part),
        }


def index_one_certificate(
    f,
    trial_bound: int = TRIAL_BOUND,
    rho_iterations: int = RHO_ITERATIONS,
    seed: int = DEFAULT_SEED,
) -> IndexReport:
    """Test every prime whose square divides disc(f).

    Since ``disc(f) = index**2 * disc(O_K)``, only those primes can divide the
    index.  A composite cofactor that the factoring budget could not split
    leaves the verdict unknown unless some tested prime already divides.
    """
    f = _check_minpoly(f)
    d = discriminant(f)
    if d == 0:
        raise ValueError("discriminant is zero")
    disc = d.numerator
    fac = factor_integer(disc, trial_bound=trial_bound, rho_iterations=rho_iterations)
    report = IndexReport(f, disc, unfactored_part=fac.unfactored)
    for p, e in fac.factors.items():
        if e >= 2:
            divides, witness = dedekind_divides_index(f, p, seed=seed)
            report.tested_primes.append(PrimeTest(p, divides, witness))
    if any(t.divides for t in report.tested_primes):
        report.index_is_one = TriState.NO
    elif fac.unfactored > 1:
        report.index_is_one = TriState.UNKNOWN
    else:
        report.index_is_one = TriState.YES
    return report
