"""Dense exact polynomials over Q and over a prime field.

Coefficients are stored in ascending order: ``a_0 + a_1 X + ... + a_n X^n``
is the tuple ``(a_0, a_1, ..., a_n)``.  The zero polynomial is the empty
tuple and has degree -1.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Sequence


def _strip(coeffs: list) -> list:
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c.strip())
    raise TypeError(f"unsupported coefficient {c!r}")


class RatPoly:
    """Polynomial with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", tuple(_strip([_as_fraction(c) for c in coeffs])))

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    # -- constructors -------------------------------------------------
    @classmethod
    def x(cls) -> RatPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> RatPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> RatPoly:
        return cls([0] * k + [c])

    @classmethod
    def parse(cls, text: str) -> RatPoly:
        return parse_poly(text)

    # -- basic properties ---------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError(f"{self} has non-integer coefficients")
        return [c.numerator for c in self.coeffs]

    def denominator(self) -> int:
        """Least common multiple of the coefficient denominators."""
        from math import lcm

        d = 1
        for c in self.coeffs:
            d = lcm(d, c.denominator)
        return d

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    # -- arithmetic ---------------------------------------------------
    @staticmethod
    def _coerce(other) -> RatPoly:
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return RatPoly([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return RatPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result, base = RatPoly((1,)), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> RatPoly:
        c = _as_fraction(c)
        return RatPoly([a * c for a in self.coeffs])

    def __truediv__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(c))
        return NotImplemented

    def __divmod__(self, other: RatPoly):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        inv = 1 / other.lc
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv
            if c:
                quot[k - dq] = c
                for j, bj in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * bj
        return RatPoly(quot), RatPoly(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other: RatPoly) -> RatPoly:
        return divmod(self, other)[0]

    def __mod__(self, other: RatPoly) -> RatPoly:
        return divmod(self, other)[1]

    def monic(self) -> RatPoly:
        if self.is_zero():
            return self
        return self.scale(1 / self.lc)

    def derivative(self) -> RatPoly:
        return RatPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: RatPoly, modulus: RatPoly | None = None) -> RatPoly:
        """Return ``self(inner)``, reduced modulo ``modulus`` when given."""
        acc = RatPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
            if modulus is not None:
                acc = acc % modulus
        return acc

    def shift(self, a) -> RatPoly:
        """``self(X + a)``."""
        return self.compose(RatPoly((a, 1)))

    # -- comparison / display -----------------------------------------
    def __eq__(self, other):
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RatPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(("RatPoly", self.coeffs))

    def __repr__(self):
        return f"RatPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)

    def to_json(self) -> dict:
        return {"coeffs": [_frac_str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj) -> RatPoly:
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(Fraction(str(c)) for c in obj["coeffs"])


def poly_gcd(a: RatPoly, b: RatPoly) -> RatPoly:
    """Monic gcd over Q (zero if both are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(f: RatPoly | Sequence, var: str = "x") -> str:
    coeffs = f.coeffs if isinstance(f, RatPoly) else tuple(f)
    if not coeffs:
        return "0"
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = _frac_str(Fraction(a))
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{_frac_str(Fraction(a))}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(
    r"""^(?P<coef>\d+(?:/\d+)?)?\s*\*?\s*(?:(?P<var>[a-zA-Z])(?:\s*(?:\^|\*\*)\s*(?P<exp>\d+))?)?(?:/(?P<den>\d+))?$"""
)


def parse_poly(text: str) -> RatPoly:
    """Parse ``x^3 + 8*x^2 + 4`` style input (``8x^2``, ``**`` and ``x^2/2`` also accepted)."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial")
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, Fraction] = {}
    var_name = None
    for t in terms:
        sign = -1 if t[0] == "-" else 1
        body = t.lstrip("+-")
        m = _TERM.match(body)
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise ValueError(f"cannot parse term {t!r} in {text!r}")
        try:
            coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        except ZeroDivisionError:
            raise ValueError(f"division by zero in {text!r}") from None
        if m.group("den"):
            if int(m.group("den")) == 0:
                raise ValueError(f"division by zero in {text!r}")
            coef /= int(m.group("den"))
        if m.group("var"):
            v = m.group("var").lower()
            if var_name is None:
                var_name = v
            elif v != var_name:
                raise ValueError(f"mixed variables in {text!r}")
            exp = int(m.group("exp")) if m.group("exp") else 1
        else:
            exp = 0
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + sign * coef
    n = max(coeffs) + 1
    return RatPoly([coeffs.get(i, 0) for i in range(n)])


def as_ratpoly(f) -> RatPoly:
    """Accept a RatPoly, a polynomial string, or an ascending coefficient list."""
    if isinstance(f, RatPoly):
        return f
    if isinstance(f, str):
        return parse_poly(f)
    if isinstance(f, dict):
        return RatPoly.from_json(f)
    return RatPoly(f)


X = RatPoly.x()


class FpPoly:
    """Polynomial over the prime field F_p, coefficients in ``[0, p)``."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "coeffs", tuple(_strip([int(c) % p for c in coeffs])))

    def __setattr__(self, name, value):
        raise AttributeError("FpPoly is immutable")

    @classmethod
    def from_ratpoly(cls, f: RatPoly, p: int) -> FpPoly:
        out = []
        for c in f.coeffs:
            if c.denominator % p == 0:
                raise ValueError(f"coefficient {c} is not {p}-integral")
            out.append(c.numerator * pow(c.denominator, -1, p))
        return cls(p, out)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == (1,)

    def _same(self, other: FpPoly):
        if not isinstance(other, FpPoly) or other.p != self.p:
            raise TypeError("FpPoly operands must share the modulus")

    def __add__(self, other: FpPoly) -> FpPoly:
        self._same(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return FpPoly(self.p, [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])

    def __neg__(self) -> FpPoly:
        return FpPoly(self.p, [-c for c in self.coeffs])

    def __sub__(self, other: FpPoly) -> FpPoly:
        return self + (-other)

    def __mul__(self, other) -> FpPoly:
        if isinstance(other, int):
            return FpPoly(self.p, [c * other for c in self.coeffs])
        self._same(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return FpPoly(self.p)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return FpPoly(self.p, out)

    __rmul__ = __mul__

    def __divmod__(self, other: FpPoly):
        self._same(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        rem = list(self.coeffs)
        dq = other.degree
        inv = pow(other.lc, -1, p)
        quot = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] * inv % p
            if c:
                quot[k - dq] = c
                for j, bj in enumerate(other.coeffs):
                    rem[k - dq + j] = (rem[k - dq + j] - c * bj) % p
        return FpPoly(p, quot), FpPoly(p, rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> FpPoly:
        if self.is_zero():
            return self
        return self * pow(self.lc, -1, self.p)

    def derivative(self) -> FpPoly:
        return FpPoly(self.p, [i * c for i, c in enumerate(self.coeffs)][1:])

    def powmod(self, k: int, modulus: FpPoly) -> FpPoly:
        result = FpPoly(self.p, [1]) % modulus
        base = self % modulus
        while k:
            if k & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            k >>= 1
        return result

    def __pow__(self, k: int) -> FpPoly:
        result, base = FpPoly(self.p, [1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.p
        return acc

    def lift(self) -> RatPoly:
        """Canonical lift to Z[X] with coefficients in ``[0, p)``."""
        return RatPoly(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, FpPoly) and self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("FpPoly", self.p, self.coeffs))

    def sort_key(self):
        return (self.degree, self.coeffs)

    def __repr__(self):
        return f"FpPoly({self.p}, {format_poly(self.coeffs)!r})"

    def __str__(self):
        return format_poly(self.coeffs)

    def to_json(self) -> dict:
        return {"p": self.p, "coeffs": [str(c) for c in self.coeffs]}


def fp_gcd(a: FpPoly, b: FpPoly) -> FpPoly:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()
