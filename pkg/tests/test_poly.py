import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rrcodes.distance import pt_weight
from rrcodes.errors import DivisionByZero, FieldMismatch
from rrcodes.field import make_field
from rrcodes.poly import Poly, poly_arith, poly_gcd, poly_pow, poly_weight

PHI = [1, 1, 1, 1, 1]


def test_divide_x5_minus_1(F7):
    q, r = poly_arith("divrem", Poly.x_pow_minus_one(F7, 5), Poly.x_minus(F7, 1))
    assert q == Poly.from_ints(F7, PHI)
    assert r.is_zero()


def test_golden_quadratics_multiply_to_phi5(F19):
    prod = poly_arith("mul", Poly.from_ints(F19, [1, 15, 1]), Poly.from_ints(F19, [1, 5, 1]))
    assert prod == Poly.from_ints(F19, PHI)


def test_gcd_with_zero_is_monic(F7):
    f = Poly.from_ints(F7, [3, 0, 2])
    g = poly_gcd(f, Poly.zero(F7))
    assert g == f.monic()
    assert g.lead == 1


def test_gcd_of_two_zeros_raises(F7):
    with pytest.raises(DivisionByZero):
        poly_gcd(Poly.zero(F7), Poly.zero(F7))


def test_divrem_by_zero(F7):
    with pytest.raises(DivisionByZero):
        Poly.one(F7).divmod(Poly.zero(F7))


def test_zero_dividend(F7):
    q, r = Poly.zero(F7).divmod(Poly.x_minus(F7, 1))
    assert q.is_zero() and r.is_zero()


def test_mixed_fields(F7, F11):
    with pytest.raises(FieldMismatch):
        Poly.one(F7) + Poly.one(F11)


def test_powers(F7):
    u = Poly.x_minus(F7, 1)
    assert poly_pow(u, 0) == Poly.one(F7)
    assert poly_pow(u, 7) == Poly.x_pow_minus_one(F7, 7)
    assert poly_weight(poly_pow(u, 13)) == 14
    assert poly_weight(poly_pow(u, 6)) == 7


def test_pow_with_modulus(F7):
    u = Poly.x_minus(F7, 1)
    mod = Poly.from_ints(F7, PHI)
    assert poly_pow(u, 9, mod) == poly_pow(u, 9) % mod


def test_weights(F7):
    assert poly_weight(Poly.zero(F7)) == 0
    assert poly_weight(Poly.from_ints(F7, PHI)) == 5


def test_canonical_zero(F7):
    a = Poly.from_ints(F7, [1, 2, 3])
    z = a + (-a)
    assert z.coeffs == () and z.degree == -1


def test_reciprocal(F11):
    f = Poly.x_minus(F11, 3)
    # reversed and made monic: root 3 becomes 3^-1 = 4
    assert f.reciprocal() == Poly.x_minus(F11, 4)


def _rand_poly(ctx, rng, deg):
    return Poly.from_ints(ctx, [rng.randrange(ctx.q) for _ in range(deg + 1)])


def test_division_identity_exhaustive_degrees(F7):
    rng = random.Random(1)
    for da in range(9):
        for db in range(9):
            a = _rand_poly(F7, rng, da)
            b = _rand_poly(F7, rng, db)
            if b.is_zero():
                continue
            q, r = a.divmod(b)
            assert q * b + r == a
            assert r.degree < b.degree


@given(st.lists(st.integers(0, 48), max_size=8), st.lists(st.integers(0, 48), min_size=1, max_size=6))
def test_divrem_over_gf49(a, b):
    F = make_field(7, 2)
    pa, pb = Poly._raw(F, a), Poly._raw(F, b)
    if pb.is_zero():
        return
    q, r = pa.divmod(pb)
    assert q * pb + r == pa
    assert r.degree < pb.degree


@given(st.lists(st.integers(0, 10), max_size=6), st.lists(st.integers(0, 10), max_size=6))
def test_gcd_divides_both(a, b):
    F = make_field(11)
    pa, pb = Poly.from_ints(F, a), Poly.from_ints(F, b)
    if pa.is_zero() and pb.is_zero():
        return
    g = poly_gcd(pa, pb)
    assert g.lead == 1
    assert (pa % g).is_zero() and (pb % g).is_zero()


@pytest.mark.parametrize("p, s", [(7, 1), (7, 2), (11, 1), (11, 2)])
def test_weight_of_x_minus_1_powers_is_digit_product(p, s):
    ctx = make_field(p)
    u = Poly.x_minus(ctx, 1)
    acc = Poly.one(ctx)
    for t in range(p**s):
        assert poly_weight(acc) == pt_weight(t, p, s).P
        acc = acc * u
