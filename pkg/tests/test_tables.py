from rrcodes.code import UNSUPPORTED, ZERO_CODE, all_specs, make_code
from rrcodes.distance import discrepancy_report, distance_exact
from rrcodes.field import make_field
from rrcodes.tables import distance_paper_table, paper_table_lookups


def test_worked_discrepancy(F7):
    c = make_code(F7, 1, {"U": 6, "Phi": 7})
    (hit,) = paper_table_lookups(c)
    assert hit.table == "C1:U<=Phi" and hit.value == 28 and hit.uses_phi5
    assert distance_exact(c) == 35


def test_tie_consults_both_case1_tables(F7):
    c = make_code(F7, 1, [3, 3])
    assert [h.table for h in paper_table_lookups(c)] == ["C1:U>=Phi", "C1:U<=Phi"]


def test_zero_and_full(F7, F11):
    assert distance_paper_table(make_code(F7, 1, [7, 7])) is ZERO_CODE
    assert distance_paper_table(make_code(F7, 1, [0, 0])) == 1
    assert distance_paper_table(make_code(F11, 1, [0] * 5)) == 1


def test_gf7_u_major_table_has_no_disagreement(F7):
    found = discrepancy_report(F7, 1)
    assert found
    assert all(d.table == "C1:U<=Phi" for d in found)
    for d in found:
        hit = next(h for h in paper_table_lookups(d.code) if h.table == d.table)
        assert hit.uses_phi5


def test_every_spec_has_a_row():
    for p, m, s in ((7, 1, 1), (7, 1, 2), (19, 1, 1), (7, 2, 1)):
        for c in all_specs(make_field(p, m), s):
            lookups = paper_table_lookups(c)
            assert lookups
            assert all(h.value is not UNSUPPORTED for h in lookups), (c, lookups)


def test_case2_and_case3_tables_agree_everywhere():
    assert discrepancy_report(make_field(19), 1) == []
    assert discrepancy_report(make_field(7, 2), 1) == []


def test_case3_table_agrees_on_sampled_sweep(F11):
    for i, c in enumerate(all_specs(F11, 1)):
        if i % 11 == 0:
            assert distance_paper_table(c) == distance_exact(c)


def test_report_is_order_stable_across_jobs(F7):
    a = [d.to_dict() for d in discrepancy_report(F7, 2, jobs=1)]
    b = [d.to_dict() for d in discrepancy_report(F7, 2, jobs=2)]
    assert a == b and len(a) == 279
