"""
Fields and the factors of x^5 - 1
==================================

How x^5 - 1 splits over GF(q) depends only on q mod 5.
"""

from rrcodes import factor_x5m1, make_field
from rrcodes.field import find_fifth_root

# three fields, one for each way x^5 - 1 can split
for p in (7, 19, 11):
    F = make_field(p)
    sp = factor_x5m1(F)
    print(f"GF({p}): {sp.case.value}")
    for f in sp.factors:
        print(f"   {f.label:4s} {f.poly!r:28s} reciprocal partner {sp.recip[f.label]}")

# over GF(11) the factors are x - w^i for a fifth root of unity w
w = find_fifth_root(make_field(11))
print("fifth root of unity in GF(11):", w)

# extension fields use the smallest monic irreducible as modulus
F49 = make_field(7, 2)
print("GF(49) modulus coefficients, lowest first:", F49.modulus)
print("GF(49) case:", factor_x5m1(F49).case.value)
