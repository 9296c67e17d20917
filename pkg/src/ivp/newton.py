"""p-adic valuations of roots via Newton polygons.

Valuations are rank one, normalized by ``v(p) = 1``; a value is a Fraction
or the symbol :data:`INFINITY`.  Every query returns data over the full
conjugate multiset: no single embedding is ever singled out.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Union

from .exact import AlgebraicElement, char_poly_of_element, difference_poly
from .intfact import require_prime, v_p
from .poly import RatPoly, as_ratpoly


@total_ordering
class Infinity:
    """The valuation of zero; larger than every rational."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return isinstance(other, Infinity)

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return not isinstance(other, Infinity)

    def __hash__(self):
        return hash("ivp.INFINITY")

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (Infinity, ())


INFINITY = Infinity()
Val = Union[Fraction, Infinity]


def parse_val(s) -> Val:
    if isinstance(s, Infinity):
        return s
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    s = str(s).strip()
    if s.lower() in ("inf", "infinity", "oo"):
        return INFINITY
    return Fraction(s)


def val_str(v: Val) -> str:
    if isinstance(v, Infinity):
        return "inf"
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def multiset_json(ms: Counter) -> list:
    return [[val_str(v), m] for v, m in sorted(ms.items())]


@dataclass(frozen=True)
class Segment:
    slope: Fraction  # valuation of each root on this edge
    length: int


@dataclass(frozen=True)
class NewtonPolygon:
    """Root valuations of a polynomial at ``prime``.

    Segments are listed by increasing root valuation; ``zero_roots`` counts
    the roots equal to 0, which are stripped before the hull is built.
    """

    prime: int
    segments: tuple[Segment, ...]
    zero_roots: int = 0

    def root_valuations(self) -> Counter:
        out: Counter = Counter()
        for s in self.segments:
            out[s.slope] += s.length
        if self.zero_roots:
            out[INFINITY] += self.zero_roots
        return out

    def to_json(self) -> dict:
        return {
            "prime": self.prime,
            "zero_roots": self.zero_roots,
            "segments": [{"slope": val_str(s.slope), "length": s.length} for s in self.segments],
        }

    @classmethod
    def from_json(cls, obj: dict) -> NewtonPolygon:
        return cls(
            int(obj["prime"]),
            tuple(Segment(Fraction(s["slope"]), int(s["length"])) for s in obj["segments"]),
            int(obj.get("zero_roots", 0)),
        )


def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(f, p: int) -> NewtonPolygon:
    f = as_ratpoly(f)
    require_prime(p)
    if f.is_zero():
        raise ValueError("Newton polygon of the zero polynomial")
    for c in f.coeffs:
        if c.denominator % p == 0:
            raise ValueError(f"coefficient {c} has {p} in its denominator; normalize first")
    z = next(i for i, c in enumerate(f.coeffs) if c)
    pts = [(i, v_p(c, p)) for i, c in enumerate(f.coeffs) if i >= z and c]
    hull: list = []
    for pt in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    segs = [
        Segment(Fraction(y0 - y1, x1 - x0), x1 - x0)
        for (x0, y0), (x1, y1) in zip(hull, hull[1:])
    ]
    return NewtonPolygon(p, tuple(reversed(segs)), z)


def root_valuations(f, p: int) -> Counter:
    """Multiset ``{valuation: multiplicity}`` of the roots of ``f`` at ``p``."""
    return newton_polygon(f, p).root_valuations()


def element_valuations(e: AlgebraicElement, p: int) -> Counter:
    """Valuations of ``e`` over all its conjugate embeddings."""
    return _scaled_root_valuations(char_poly_of_element(e), p)


def _scaled_root_valuations(f: RatPoly, p: int) -> Counter:
    # Multiply the roots by p^s to clear p from denominators, then shift back.
    n = f.degree
    s = 0
    for i, c in enumerate(f.coeffs):
        if c and c.denominator % p == 0:
            need = -(-v_p(c.denominator, p) // (n - i))
            s = max(s, need)
    if s == 0:
        return root_valuations(f, p)
    g = RatPoly([c * Fraction(p) ** (s * (n - i)) for i, c in enumerate(f.coeffs)])
    out: Counter = Counter()
    for v, m in root_valuations(g, p).items():
        out[v if isinstance(v, Infinity) else v - s] += m
    return out


def difference_valuations(f, g, p: int) -> Counter:
    """Valuations of ``b - a`` over all root pairs (a of f, b of g); zero gaps are INFINITY."""
    f, g = as_ratpoly(f), as_ratpoly(g)
    if f.is_zero() or g.is_zero():
        raise ValueError("nonzero polynomials required")
    return _scaled_root_valuations(difference_poly(f, g), p)


def min_finite(ms: Counter):
    finite = [v for v in ms if not isinstance(v, Infinity)]
    return min(finite) if finite else INFINITY
