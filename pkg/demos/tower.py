"""Walk up the tower of nth roots of p and watch x^n/p map each level down one step.

    python3 demos/tower.py [p] [n] [levels]
"""

import sys

from ivp.exact import AlgebraicElement, char_poly_from
from ivp.families import tower_exponent, tower_min_poly
from ivp.ivptests import is_integral_value
from ivp.newton import element_valuations, val_str
from ivp.poly import RatPoly


def main(p=2, n=2, levels=4):
    xn = RatPoly.monomial(n)
    for k in range(1, levels + 1):
        s = AlgebraicElement(tower_min_poly(p, n, k))
        v = min(element_valuations(s, p))
        image = char_poly_from(s.min_poly, xn / p)
        print(f"s_{k} = {p}^({tower_exponent(n, k)})  min poly {s.min_poly}")
        print(f"    v_{p}(s_{k}) = {val_str(v)};  s_{k}^{n}/{p} integral: {is_integral_value(s.apply(xn), p)};"
              f"  its char poly {image}")


if __name__ == "__main__":
    main(*map(int, sys.argv[1:]))
