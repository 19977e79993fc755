import pytest
from hypothesis import given
from hypothesis import strategies as st

from rsquad.boolfun import table_from_anf
from rsquad.gf2field import field_new, trace_form_table
from rsquad.gf2poly import Gf2Poly
from rsquad.rsq import (
    RsQuadratic,
    Semantics,
    a_polynomial,
    anf,
    is_equitable,
    is_semi_equitable,
    partition_by_valuation,
    reduce_mod,
    vanishes_identically,
)
from strategies import rs_quadratics

R = RsQuadratic
P = Gf2Poly.parse


def test_literal_validation():
    assert R.parse("3,4").offsets == (3, 4)
    assert str(R.of(4, 3)) == "3,4"
    assert R((1, 5)).J == 5
    for bad in [(), (0,), (4, 3), (2, 2)]:
        with pytest.raises(ValueError):
            R(bad)
    with pytest.raises(ValueError):
        R.parse("1,x")


def test_a_polynomial_examples():
    for t in range(1, 8):
        assert a_polynomial(R((t,))) == Gf2Poly((1 << (2 * t)) | 1)
    assert a_polynomial(R((3, 4))) == P("1+x+x^7+x^8")
    assert a_polynomial(R((1, 2, 3))) == P("1+x+x^2+x^4+x^5+x^6")


def test_reduce_mod_examples():
    assert reduce_mod(R((3, 4)), 7).counts == {3: 1, 4: 1}
    assert reduce_mod(R((1, 2, 3)), 4).counts == {1: 1, 2: 1, 3: 1}
    assert reduce_mod(R((5,)), 4).counts == {1: 1}


def test_equitable_examples():
    assert is_equitable(reduce_mod(R((3, 4)), 7))
    m = reduce_mod(R((1, 2, 3)), 4)
    assert is_semi_equitable(m) and not is_equitable(m)
    m = reduce_mod(R((3, 4)), 8)
    assert not is_equitable(m) and not is_semi_equitable(m)


def test_vanishing_examples():
    assert vanishes_identically(R((1, 2, 3)), 4)
    assert vanishes_identically(R((3, 4)), 7)
    assert not any(vanishes_identically(R((1,)), n) for n in range(3, 40))


def test_partition_examples():
    assert partition_by_valuation(R((1, 2, 3))) == {0: R((1, 3)), 1: R((2,))}
    assert partition_by_valuation(R((3, 4))) == {0: R((3,)), 2: R((4,))}
    assert partition_by_valuation(R((6,))) == {1: R((6,))}


def test_anf_short_and_orbit():
    short = anf(R((2,)), 4, Semantics.ANF)
    assert short.monomials() == [(0, 2), (1, 3)]
    assert anf(R((2,)), 4, Semantics.ORBIT).is_zero()
    lin = anf(R((5,)), 5, Semantics.ORBIT)
    assert lin.linear == 0b11111 and not any(lin.adj)
    # (0,3)_5 is (0,2)_5
    assert anf(R((3,)), 5, Semantics.ANF) == anf(R((2,)), 5, Semantics.ANF)


@given(rs_quadratics(max_j=6), st.integers(1, 16))
def test_vanishing_matches_oracles(q, n):
    v = vanishes_identically(q, n)
    assert v == table_from_anf(q, n, Semantics.ORBIT).is_zero()
    assert v == (not trace_form_table(field_new(n), q).any())


@given(rs_quadratics(max_j=8), st.integers(1, 20))
def test_equitable_parities(q, n):
    m = reduce_mod(q, n)
    assert m.size() == len(q)
    if is_equitable(m):
        assert m.size() % 2 == 0
    if is_semi_equitable(m):
        assert m.size() % 2 == 1 and n % 2 == 0


@given(rs_quadratics(max_j=12))
def test_a_polynomial_is_palindromic(q):
    p = a_polynomial(q)
    assert p.is_palindromic() and p.bits & 1
