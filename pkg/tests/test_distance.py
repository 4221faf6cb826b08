import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rrcodes.code import ZERO_CODE, all_specs, component_code, dimension, is_subcode, make_code
from rrcodes.distance import (
    as_json_distance,
    beta_tau,
    distance_exact,
    distance_report,
    exact_with_witness,
    min_pt_at_least,
    pt_table,
    pt_weight,
)
from rrcodes.errors import LOutOfRange, TOutOfRange
from rrcodes.field import make_field
from rrcodes.oracle import Budget, brute_distance
from rrcodes.errors import BudgetExceeded
from rrcodes.weights import simple_distance


def test_digit_profile():
    d = pt_weight(13, 7, 2)
    assert d.digits == (6, 1) and d.P == 14
    with pytest.raises(TOutOfRange):
        pt_weight(49, 7, 2)
    with pytest.raises(TOutOfRange):
        pt_weight(-1, 7, 2)


def test_min_pt_examples():
    assert min_pt_at_least(44, 7, 2) == 21
    assert min_pt_at_least(0, 7, 2) == 1
    assert beta_tau(44, 7, 2) == (1, 1)
    with pytest.raises(LOutOfRange):
        min_pt_at_least(49, 7, 2)


@pytest.mark.parametrize("p, s", [(7, 1), (7, 2), (7, 3), (11, 2), (19, 1), (13, 2)])
def test_min_pt_brute(p, s):
    P = pt_table(p, s)
    for l in range(p**s):
        assert min_pt_at_least(l, p, s) == min(P[l:])
        if l:
            beta, tau = beta_tau(l, p, s)
            assert (beta + 2) * p**tau == min(P[l:])


def _naive_distance(code):
    best = None
    for t in range(code.ps):
        src = component_code(code, t)
        if src.is_zero():
            continue
        v = pt_weight(t, code.ctx.p, code.s).P * simple_distance(src)
        best = v if best is None else min(best, v)
    return ZERO_CODE if best is None else best


@pytest.mark.parametrize("p, m, s", [(7, 1, 1), (7, 1, 2), (19, 1, 1), (11, 1, 1), (7, 2, 1)])
def test_sweep_engine_matches_naive_minimum(p, m, s):
    ctx = make_field(p, m)
    for code in itertools.islice(all_specs(ctx, s), 0, None, 7 if ctx.q == 11 else 1):
        assert distance_exact(code) == _naive_distance(code)


def test_worked_example(F7, F11):
    rep = distance_report(make_code(F7, 1, {"U": 6, "Phi": 7}))
    assert rep.exact == 35 and rep.witness_t == 6 and rep.paper_value == 28 and not rep.agrees
    assert rep.to_dict() == {"exact": 35, "witness_t": 6, "paper": 28, "agrees": False}
    c = make_code(F11, 1, [11, 11, 11, 11, 10])
    assert distance_exact(c) == 55
    assert distance_report(c).agrees


def test_zero_code(F7):
    z = make_code(F7, 1, [7, 7])
    assert distance_exact(z) is ZERO_CODE
    assert exact_with_witness(z) == (ZERO_CODE, None)
    assert as_json_distance(ZERO_CODE) == 0


def test_witness_is_smallest(F7):
    # U^1 Phi^0: t=0 gives 1 * 2 = 2, the only minimizer
    d, t = exact_with_witness(make_code(F7, 1, [1, 0]))
    assert (d, t) == (2, 0)


def test_oracle_gf7_low_dimension(F7):
    for code in all_specs(F7, 1):
        if 0 < dimension(code) <= 6:
            assert distance_exact(code) == brute_distance(code)


def test_oracle_budget(F7):
    with pytest.raises(BudgetExceeded):
        brute_distance(make_code(F7, 1, [0, 0]), Budget(1000))


spec7 = st.lists(st.integers(0, 7), min_size=2, max_size=2)
spec11 = st.lists(st.integers(0, 11), min_size=5, max_size=5)
spec49 = st.lists(st.integers(0, 49), min_size=2, max_size=2)


@given(spec49, spec49)
def test_monotone_under_containment(a, b):
    ctx = make_field(7)
    ca, cb = make_code(ctx, 2, a), make_code(ctx, 2, b)
    if is_subcode(ca, cb) and not ca.is_zero_code():
        assert distance_exact(ca) >= distance_exact(cb)


@given(spec11)
def test_singleton_and_divisibility(e):
    ctx = make_field(11)
    c = make_code(ctx, 1, e)
    d = distance_exact(c)
    if d is ZERO_CODE:
        assert c.is_zero_code()
        return
    assert 1 <= d <= c.n - dimension(c) + 1


@given(spec11, st.permutations(range(5)))
def test_case3_permutation_invariance(e, perm):
    ctx = make_field(11)
    a = make_code(ctx, 1, e)
    b = make_code(ctx, 1, [e[i] for i in perm])
    assert distance_exact(a) == distance_exact(b)


@given(st.lists(st.integers(0, 19), min_size=3, max_size=3))
def test_case2_quadratic_swap_invariance(e):
    ctx = make_field(19)
    a = make_code(ctx, 1, e)
    b = make_code(ctx, 1, [e[0], e[2], e[1]])
    assert distance_exact(a) == distance_exact(b)
