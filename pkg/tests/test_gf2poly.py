import pytest
from hypothesis import given
from hypothesis import strategies as st

from rsquad.gf2poly import (
    ONE,
    X,
    ZERO,
    Gf2Poly,
    dividing_period,
    divrem,
    gcd,
    mul,
    radical,
    radical_odd_order,
    unit_multiplicity,
)

P = Gf2Poly.parse
polys = st.integers(0, (1 << 65) - 1).map(Gf2Poly)
nonzero = st.integers(1, (1 << 65) - 1).map(Gf2Poly)


def test_mul_examples():
    assert mul(P("1+x"), P("1+x")) == P("1+x^2")
    assert mul(P("1+x"), P("1+x+x^2")) == P("1+x^3")
    assert P("1+x^3") ** 2 == P("1+x^6")


def test_divrem_examples():
    assert divrem(P("1+x^6"), P("1+x+x^3+x^4")) == (P("1+x+x^2"), ZERO)
    assert divrem(P("1+x+x^2"), P("1+x")) == (X, ONE)
    assert divrem(ZERO, P("1+x")) == (ZERO, ZERO)
    with pytest.raises(ZeroDivisionError):
        divrem(ONE, ZERO)


def test_gcd_examples():
    assert gcd(P("1+x^6"), P("1+x+x^3+x^4")) == P("1+x+x^3+x^4")
    assert gcd(P("1+x^7"), P("1+x")) == P("1+x")
    p = P("1+x^2+x^5")
    assert gcd(p, p) == p
    with pytest.raises(ValueError):
        gcd(ZERO, ZERO)


def test_unit_multiplicity_examples():
    assert unit_multiplicity(P("1+x+x^7+x^8")) == 2
    assert unit_multiplicity(P("1+x+x^2")) == 0
    assert unit_multiplicity(P("1+x+x^2+x^4+x^5+x^6")) == 4
    with pytest.raises(ValueError):
        unit_multiplicity(ZERO)


def test_radical_odd_order_examples():
    assert radical_odd_order(P("1+x+x^2")) == 3
    assert radical_odd_order(P("1+x+x^3+x^4")) == 3
    assert radical_odd_order(P("1+x^5") * P("1+x^3")) == 15
    with pytest.raises(ValueError):
        radical_odd_order(P("x+x^2"))


def test_dividing_period_examples():
    assert dividing_period(P("1+x^3+x^5+x^8")) == 30  # {1,4}
    assert dividing_period(P("1+x+x^3+x^4")) == 6  # {1,2}
    assert dividing_period(P("1+x^6")) == 6


def test_radical_of_squares():
    # p / gcd(p, p') alone gets this wrong since p' = 0
    assert radical(P("1+x^4")) == P("1+x")
    assert radical(P("1+x^2+x^4") * P("1+x")) == P("1+x+x^2") * P("1+x")


def test_text_and_hex_round_trip():
    p = P("1+x+x^4")
    assert str(p) == "1+x+x^4"
    assert p.exponents() == [0, 1, 4]
    assert Gf2Poly.from_hex(p.hex()) == p
    assert ZERO.degree is None


@given(polys, nonzero)
def test_divrem_reconstructs(a, b):
    q, r = divrem(a, b)
    assert q * b + r == a
    assert r.degree is None or r.degree < b.degree


@given(nonzero, nonzero)
def test_degree_of_product(a, b):
    assert (a * b).degree == a.degree + b.degree


@given(nonzero, nonzero, nonzero)
def test_gcd_is_greatest(a, b, c):
    g = gcd(a * c, b * c)
    assert g.divides(a * c) and g.divides(b * c)
    assert c.divides(g)


@given(nonzero, st.integers(0, 8))
def test_unit_multiplicity_adds(p, k):
    assert unit_multiplicity(p * P("1+x") ** k) == unit_multiplicity(p) + k


@given(st.integers(1, (1 << 12) - 1).map(lambda b: Gf2Poly(b << 1 | 1)))
def test_dividing_period_is_minimal(p):
    n = dividing_period(p)
    assert p.divides(Gf2Poly((1 << n) | 1))
    for m in range(1, n):
        if n % m == 0:
            assert not p.divides(Gf2Poly((1 << m) | 1))
