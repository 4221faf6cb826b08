import pytest
from hypothesis import given
from hypothesis import strategies as st

from rrcodes.code import generator_degree, make_code
from rrcodes.errors import BudgetExceeded, ZeroCodeHasNoDistance
from rrcodes.field import make_field
from rrcodes.mds import (
    CLAUSE_FULL,
    CLAUSE_LINEAR,
    CLAUSE_REPETITION,
    classify_mds,
    iter_predicted,
    mds_scan,
    mds_verdicts,
    singleton_defect,
)


def _exps(codes):
    return [c.exponents for c in codes]


def test_gf7(F7):
    assert _exps(mds_scan(F7, 1)) == [(0, 0), (1, 0), (6, 7)]


def test_gf19_and_gf11(F19, F11):
    assert _exps(mds_scan(F19, 1)) == [(0, 0, 0), (1, 0, 0), (18, 19, 19)]
    found = mds_scan(F11, 1)
    assert len(found) == 11
    assert {generator_degree(c) for c in found} == {0, 1, 54}


def test_clauses(F7):
    assert classify_mds(make_code(F7, 1, [0, 0])).clause == CLAUSE_FULL
    assert classify_mds(make_code(F7, 1, [1, 0])).clause == CLAUSE_LINEAR
    v = classify_mds(make_code(F7, 1, [6, 7]))
    assert v.is_mds and v.clause == CLAUSE_REPETITION and v.defect == 0
    z = classify_mds(make_code(F7, 1, [7, 7]))
    assert not z.is_mds and z.defect is None


def test_defect_of_zero_code(F7):
    with pytest.raises(ZeroCodeHasNoDistance):
        singleton_defect(make_code(F7, 1, [7, 7]))


def test_budget(F11):
    with pytest.raises(BudgetExceeded):
        mds_scan(F11, 1, max_specs=1000)


def test_verdicts_cover_sweep(F7):
    vs = mds_verdicts(F7, 1)
    assert len(vs) == 64
    assert [v.code for v in vs if v.is_mds] == list(iter_predicted(F7, 1))
    assert vs == mds_verdicts(F7, 1, jobs=2)


@given(st.lists(st.integers(0, 49), min_size=2, max_size=2))
def test_defect_nonnegative_s2(e):
    c = make_code(make_field(7), 2, e)
    if c.is_zero_code():
        return
    d = singleton_defect(c)
    assert d >= 0
    assert (d == 0) == (generator_degree(c) in (0, 1, c.n - 1))
