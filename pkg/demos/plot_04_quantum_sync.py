"""
Quantum synchronizable codes
============================

A nested pair c2 > c1 of dual-containing codes yields a code that also
corrects block misalignment of up to a_l positions left and a_r right.
"""

from rrcodes import check_qsc_pair, make_code, make_field, qsc_params
from rrcodes.qsc import eligible_first_codes

F = make_field(7)
c1 = make_code(F, 1, {"U": 1, "Phi": 3})
c2 = make_code(F, 1, {"U": 0, "Phi": 0})

res = check_qsc_pair(c1, c2)
print("eligible:", res.eligible, res.checks["misalignment"])
print(qsc_params(c1, 2, 3))

# every first code that works with some second code
for c in eligible_first_codes(F, 1):
    print(c.exps, qsc_params(c, 0, 0))
