"""
Minimum distance of a repeated-root code
========================================

The distance of <prod L^{e_L}> is a minimum over t of P_t times the
distance of a length-5 component code.  Here we compare that engine
against enumeration and against the printed tables.
"""

from rrcodes import brute_distance, distance_exact, distance_report, make_code, make_field, pt_weight

F = make_field(7)

# P_t is the weight of (x - 1)^t, a product over the base-p digits of t
for t in (0, 6, 13, 48):
    prof = pt_weight(t, 7, 2)
    print(f"t={t:2d} digits={prof.digits} P_t={prof.P}")

# one code, two routes
code = make_code(F, 1, {"U": 5, "Phi": 6})
print(code, "exact:", distance_exact(code), "enumerated:", brute_distance(code))

# the repetition-type code where the printed row is short by a factor 4/5
rep = distance_report(make_code(F, 1, {"U": 6, "Phi": 7}))
print("exact", rep.exact, "printed", rep.paper_value, "witness t", rep.witness_t)
