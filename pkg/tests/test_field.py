import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rrcodes.errors import CompositeP, DivisionByZero, FieldMismatch, FieldOverflow, PTooSmall
from rrcodes.field import FieldElement, fe_arith, find_fifth_root, make_field, monic_irreducibles


def test_prime_field_modulus_is_x(F7):
    assert F7.q == 7
    assert F7.modulus == (0, 1)


def test_gf49_modulus_is_first_irreducible_quadratic(F49):
    # first monic quadratic, coefficients (c0, c1) in product order, without a root in GF(7)
    for c0, c1 in itertools.product(range(7), repeat=2):
        if all((x * x + c1 * x + c0) % 7 for x in range(7)):
            expected = (c0, c1, 1)
            break
    assert F49.modulus == expected == (1, 0, 1)


@pytest.mark.parametrize("p, m, err", [(6, 1, CompositeP), (5, 1, PTooSmall), (2, 1, PTooSmall), (7, 40, FieldOverflow)])
def test_make_field_rejects(p, m, err):
    with pytest.raises(err):
        make_field(p, m)


def test_make_field_is_deterministic():
    a = make_field(7, 3)
    make_field.cache_clear()
    b = make_field(7, 3)
    assert a.modulus == b.modulus
    assert a == b


def test_basic_prime_field_ops(F7):
    three = FieldElement(F7, 3)
    assert fe_arith(F7, "inv", three).value == 5
    assert fe_arith(F7, "pow", three, 6).value == 1
    assert (three * three.inverse()).value == 1


def test_inverse_of_zero(F7):
    with pytest.raises(DivisionByZero):
        F7.inv(0)


def test_cross_context_operands(F7, F11):
    with pytest.raises(FieldMismatch):
        FieldElement(F7, 1) + FieldElement(F11, 1)


def test_every_nonzero_gf49_element_is_invertible(F49):
    for a in range(1, 49):
        assert F49.mul(a, F49.inv(a)) == 1


@pytest.mark.parametrize("p, m", [(7, 1), (7, 2), (11, 1), (11, 2), (19, 1)])
def test_group_laws_and_frobenius(p, m):
    ctx = make_field(p, m)
    q = ctx.q
    elems = range(q)
    for a in elems:
        assert ctx.add(a, ctx.neg(a)) == 0
        assert ctx.add(a, 0) == a and ctx.mul(a, 1) == a
        if a:
            assert ctx.mul(a, ctx.inv(a)) == 1
    # x -> x^p respects + and * on a grid of pairs
    for a in elems:
        for b in range(0, q, max(1, q // 13)):
            assert ctx.pow(ctx.add(a, b), p) == ctx.add(ctx.pow(a, p), ctx.pow(b, p))
            assert ctx.pow(ctx.mul(a, b), p) == ctx.mul(ctx.pow(a, p), ctx.pow(b, p))


@given(st.integers(0, 48), st.integers(0, 48), st.integers(0, 48))
def test_gf49_ring_axioms(a, b, c):
    F = make_field(7, 2)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, b) == F.add(b, a)


def test_tables_match_scalar_ops(F49):
    add, mul = F49.add_table, F49.mul_table
    for a in range(49):
        for b in range(49):
            assert add[a, b] == F49.add(a, b)
            assert mul[a, b] == F49.mul(a, b)


def test_fifth_root_gf11(F11):
    w = find_fifth_root(F11)
    assert w.value == 3
    assert F11.pow(3, 5) == 1
    assert sorted(F11.pow(3, i) for i in range(1, 5)) == [3, 4, 5, 9]


@pytest.mark.parametrize("p, m", [(7, 1), (19, 1), (13, 1), (7, 2), (11, 1), (31, 1), (41, 1), (13, 2), (7, 4)])
def test_fifth_root_absent_exactly_when_q_not_1_mod_5(p, m):
    ctx = make_field(p, m)
    w = find_fifth_root(ctx)
    if ctx.q % 5 != 1:
        assert w is None
    else:
        assert w.value != 1 and ctx.pow(w.value, 5) == 1


def test_irreducibles_have_no_roots():
    for f in monic_irreducibles(7, 3):
        assert all(sum(c * x**i for i, c in enumerate(f)) % 7 for x in range(7))
