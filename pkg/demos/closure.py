"""Membership in S(f, d) sets and binomial witnesses outside the closure of Z.

    python3 demos/closure.py
"""

from collections import Counter

from ivp.closure import IvpGenerator, closure_member, z_closure_witness
from ivp.exact import AlgebraicElement
from ivp.families import quadratic_integers
from ivp.poly import X, parse_poly

half = IvpGenerator(X, 2)
for text in ("x^2-8", "x^2+2x+4", "x^2-2", "x^2-x-1"):
    e = AlgebraicElement(parse_poly(text))
    print(f"root of {text:9s} in 2*Zbar: {closure_member([half], e)}")

print()
for text in ("x^2-2", "x^2-x-1", "x^2-x+6"):
    w = z_closure_witness(AlgebraicElement(parse_poly(text)), 8)
    print(f"root of {text:8s}: binomial(a, {w.k}) has char poly {w.char_poly}")

ks = Counter(z_closure_witness(e, 8).k for e in quadratic_integers(10))
print("\nsmallest witness k over quadratic integers of height <= 10:", dict(sorted(ks.items())))
