"""Three families, three behaviours at a prime, then covers vs residue classes.

    python3 demos/sequences.py
"""

from fractions import Fraction

from ivp.families import family_verdict, geometric_partial_sums, make_family
from ivp.newton import val_str
from ivp.sequences import ball_cover, classify_prefix, residue_classes


def show(name, report):
    gauge = ", ".join(val_str(g) for g in report.gauge)
    print(f"{name:38s} {report.kind.value:17s} gauge [{gauge}]  {report.breadth_ideal_hint}")


rou = make_family("roots-of-unity-p-power", {"p": 2, "len": 5})
show("zeta_{2^k} at 2", family_verdict(rou, 2).report)
show("zeta_{2^k} at 3", family_verdict(rou, 3).report)
show("zeta_q, q prime, at 2", family_verdict(make_family("roots-of-unity-primes", {"len": 5}), 2).report)
show("1 + 2 + ... + 2^k at 2", classify_prefix(geometric_partial_sums(2, 6)))

rad = make_family("prime-product-radicals", {"len": 6})
for p in (2, 3, 5):
    v = family_verdict(rad, p)
    show(f"radicals at {p}" + (f" ({v.report.reason})" if v.report.reason else ""), v.report)

print()
mat = rou.formula_matrix(2, range(1, 6))
for k in range(5):
    g = Fraction(1, 2**k)
    cover, classes = ball_cover(mat, g), residue_classes(mat, g)
    print(f"gamma = {val_str(g):5s}  cover {list(cover)!s:16s} classes {classes}")
