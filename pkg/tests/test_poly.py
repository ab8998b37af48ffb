import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fqtlab.errors import PolyParseError
from fqtlab.field import FiniteField
from fqtlab.poly import (NEG_INF, Poly, format_poly, format_poly_compact,
                         monic_polys_of_degree, parse_poly, poly_gcd,
                         poly_xgcd, polys_up_to)

F2 = FiniteField(2)
F3 = FiniteField(3)
F4 = FiniteField(2, 2)

t = Poly.gen(F2)
u = Poly.gen(F3)
one = Poly.one(F2)


def P2(*coeffs):
    return Poly(F2, list(coeffs))


def P3(*coeffs):
    return Poly(F3, list(coeffs))


# the canonical order is the base-q integer order on coefficient codes
def test_canonical_order_first_sixteen():
    got = [format_poly(Poly.from_index(F2, k)) for k in range(16)]
    assert got == [
        "0", "1", "t", "t+1",
        "t^2", "t^2+1", "t^2+t", "t^2+t+1",
        "t^3", "t^3+1", "t^3+t", "t^3+t+1",
        "t^3+t^2", "t^3+t^2+1", "t^3+t^2+t", "t^3+t^2+t+1",
    ]


def test_index_roundtrip():
    for k in range(200):
        assert Poly.from_index(F3, k).index() == k


def test_degree_and_zero():
    assert Poly.zero(F2).deg is NEG_INF
    assert one.deg == 0
    assert t.deg == 1
    assert P2(1, 0, 1).deg == 2
    assert Poly(F2, [1, 1, 0, 0]).deg == 1  # trailing zeros trimmed


def test_basic_arithmetic_f2():
    assert (t + one) * (t + one) == P2(1, 0, 1)
    assert (t + one) * P2(1, 1, 1) == P2(1, 0, 0, 1)
    assert t * t + t == P2(0, 1, 1)
    assert -(t + one) == t + one


def test_basic_arithmetic_f3():
    assert (u + P3(2)) * (u + P3(1)) == P3(2, 0, 1)
    assert P3(1, 2) * P3(1, 2) == P3(1, 4 % 3, 4 % 3)
    assert -(u) == P3(0, 2)


def test_divmod_frozen():
    q, r = divmod(P2(0, 1, 0, 0, 0, 1), P2(1, 0, 1))  # t^5+t by t^2+1
    assert q == P2(0, 1, 0, 1) and r.is_zero()
    q, r = divmod(P2(1, 1, 0, 1), t)  # t^3+t+1 by t
    assert q == P2(1, 0, 1) and r == one
    q, r = divmod(P3(1, 1, 1), P3(2, 1))
    assert q * P3(2, 1) + r == P3(1, 1, 1) and r.deg < 1


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(t, Poly.zero(F2))


@st.composite
def gf_poly(draw, field, max_deg=12):
    n = draw(st.integers(min_value=0, max_value=max_deg + 1))
    coeffs = draw(st.lists(st.integers(0, field.q - 1),
                           min_size=n, max_size=n))
    return Poly(field, coeffs)


@settings(max_examples=60, deadline=None)
@given(a=gf_poly(F3), b=gf_poly(F3), c=gf_poly(F3))
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@settings(max_examples=60, deadline=None)
@given(a=gf_poly(F3), b=gf_poly(F3))
def test_divmod_invariant(a, b):
    if b.is_zero():
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.is_zero() or r.deg < b.deg


def test_packed_matches_schoolbook():
    # GF(2) products cross the bit-packing threshold around length 24
    import random
    rng = random.Random(7)
    for _ in range(40):
        a = Poly(F2, [rng.randrange(2) for _ in range(rng.randrange(1, 90))])
        b = Poly(F2, [rng.randrange(2) for _ in range(rng.randrange(1, 90))])
        assert a * b == a._schoolbook_mul(b)
        if not b.is_zero():
            q, r = divmod(a, b)
            assert q * b + r == a
            assert r.is_zero() or r.deg < b.deg


def test_pow_and_powmod():
    assert t ** 5 == P2(0, 0, 0, 0, 0, 1)
    assert (t + one) ** 2 == P2(1, 0, 1)
    m = P2(1, 1, 1)
    for k in range(10):
        assert t.powmod(k, m) == (t ** k) % m
    assert t ** 0 == one


def test_derivative():
    assert P2(1, 0, 1, 1).derivative() == P2(0, 0, 1)  # (t^3+t^2+1)' = t^2
    assert (t ** 2).derivative().is_zero()
    assert P3(0, 0, 0, 1).derivative().is_zero()  # (t^3)' = 0 over F_3
    assert P3(0, 0, 1).derivative() == P3(0, 2)


def test_evaluate():
    f = P3(1, 2, 1)  # t^2 + 2t + 1
    for c in range(3):
        assert f.evaluate(c) == (c * c + 2 * c + 1) % 3


def test_monic_scaled_shifted():
    f = P3(1, 0, 2)  # 2t^2 + 1
    assert f.monic() == P3(2, 0, 1)
    assert f.scaled(2) == P3(2, 0, 1)
    assert t.shifted(3) == t ** 4
    assert P2(1, 1).shifted(0) == P2(1, 1)


def test_sort_key_matches_index_order():
    polys = list(polys_up_to(F3, 3))
    keys = [p.sort_key() for p in polys]
    assert keys == sorted(keys)
    assert [p.index() for p in polys] == list(range(len(polys)))


def test_enumerators():
    assert len(list(polys_up_to(F2, 3))) == 16
    monics = list(monic_polys_of_degree(F3, 2))
    assert len(monics) == 9
    assert all(m.is_monic() and m.deg == 2 for m in monics)


def test_gcd_xgcd():
    a = t * (t + one)
    b = (t + one) * P2(1, 1, 1)
    g = poly_gcd(a, b)
    assert g == t + one
    g2, x, y = poly_xgcd(a, b)
    assert g2 == g
    assert x * a + y * b == g
    assert poly_gcd(Poly.zero(F2), b) == b.monic()


def test_format_human():
    assert format_poly(Poly.zero(F2)) == "0"
    assert format_poly(one) == "1"
    assert format_poly(P2(1, 1, 1)) == "t^2+t+1"
    assert format_poly(P3(2, 2)) == "2*t+2"
    a = Poly(F4, [3, 0, 2])
    assert format_poly(a) == "[0,1]*t^2+[1,1]"


def test_parse_human_and_compact():
    for text, want in [
        ("t^2+t+1", P2(1, 1, 1)),
        ("t", t),
        ("0", Poly.zero(F2)),
        ("1+t", P2(1, 1)),
        ("[1,1,1]", P2(1, 1, 1)),
    ]:
        assert parse_poly(F2, text) == want
    assert parse_poly(F3, "2*t+2") == P3(2, 2)
    assert parse_poly(F3, "2t^2") == P3(0, 0, 2)
    assert parse_poly(F4, "[0,1]*t^2+[1,1]") == Poly(F4, [3, 0, 2])


def test_parse_format_roundtrip():
    for field in (F2, F3, F4):
        for k in range(100):
            a = Poly.from_index(field, k)
            assert parse_poly(field, format_poly(a)) == a
            assert parse_poly(field, format_poly_compact(a)) == a


def test_parse_rejects_garbage():
    for bad in ["t^", "x+1", "t^-1", "2", "[1,2]", "t^2++1", ""]:
        with pytest.raises(PolyParseError):
            parse_poly(F2, bad)


def test_coefficient_validation():
    with pytest.raises(ValueError):
        Poly(F2, [0, 2])
    with pytest.raises(ValueError):
        Poly(F3, [-1])
