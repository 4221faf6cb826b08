"""
MDS codes and duals
===================

Only three generator degrees give MDS codes.  Duals move exponents onto
reciprocal partners, which matters when x^5 - 1 splits completely.
"""

from rrcodes import brute_dual_check, dual_code, make_code, make_field, mds_scan, printed_dual

for p in (7, 19, 11):
    found = mds_scan(make_field(p), 1)
    print(f"GF({p}):", [c.exponents for c in found])

F11 = make_field(11)
code = make_code(F11, 1, [3, 7, 1, 9, 10])
d = dual_code(code)
print("code     ", code.exps)
print("dual     ", d.exps, "orthogonal:", brute_dual_check(code, dual=d))

# keeping each exponent on its own label breaks orthogonality here
bad = printed_dual(code)
print("same-label", bad.exps, "orthogonal:", brute_dual_check(code, dual=bad))
