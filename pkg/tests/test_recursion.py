import pytest
from hypothesis import given
from hypothesis import strategies as st

from rsquad.errors import InconsistentDataError, NoRecurrenceError
from rsquad.quadform import mrs_report
from rsquad.recursion import (
    IntMatrix,
    RecurrenceSpec,
    extend,
    fit_recurrence,
    format_poly,
    hadamard_matrix,
    hadamard_power_report,
    minimal_polynomial,
    mrs_recurrence,
    mrs_recursion_poly,
    poly_mul,
    root_moduli,
    rules_core,
    rules_matrix,
)

SQRT2 = 2 ** 0.5


def test_rules_core_t3_rows():
    rows = rules_core(3).rows
    assert rows[:4] == (
        (1, 0, 0, 0, 1, 0, 0, 0),
        (1, 0, 0, 0, -1, 0, 0, 0),
        (0, 1, 0, 0, 0, 1, 0, 0),
        (0, 1, 0, 0, 0, -1, 0, 0),
    )
    assert rows[-1] == (0, 0, 0, 1, 0, 0, 0, -1)


def test_rules_matrix_small():
    assert rules_matrix(1).rows == ((1, 1, 0), (1, -1, 0), (0, 1, 2))
    assert rules_matrix(3).dim == 9
    with pytest.raises(ValueError):
        rules_matrix(11)


def test_hadamard_m2():
    assert set(hadamard_matrix(2).rows) == {(1, 1, 1, 1), (1, -1, 1, -1), (1, 1, -1, -1), (1, -1, -1, 1)}


def test_minimal_polynomial_examples():
    assert format_poly(minimal_polynomial(rules_matrix(3))) == "x^7 - 2x^6 - 8x + 16"
    assert minimal_polynomial(rules_matrix(1)) == (4, -2, -2, 1)
    assert minimal_polynomial(IntMatrix.identity(5)) == (-1, 1)
    assert minimal_polynomial(IntMatrix(((0, 1), (0, 0)))) == (0, 0, 1)


def test_mrs_poly_examples():
    assert format_poly(mrs_recursion_poly(3)) == "x^7 - 2x^6 - 8x + 16"
    assert mrs_recursion_poly(1) == (4, -2, -2, 1)
    for t in range(1, 9):
        assert mrs_recursion_poly(t) == poly_mul((-2, 1), (-(1 << t),) + (0,) * (2 * t - 1) + (1,))


def test_matrix_identities():
    for t in range(1, 9):
        m = hadamard_matrix(t)
        assert m @ m == IntMatrix.identity(1 << t) * (1 << t)
    for t in range(1, 7):
        rep = hadamard_power_report(t)
        assert rep["R_pow_2t_is_scaled_identity"]
        assert rep["exact_powers"] == [t]


def test_minimal_polynomial_of_rules_matrix():
    for t in range(1, 7):
        p = minimal_polynomial(rules_matrix(t))
        assert p == mrs_recursion_poly(t)
        assert p[0] != 0


def test_mrs_weights_obey_recursion():
    for t in range(1, 7):
        spec = mrs_recurrence(t)
        start = 2 * t + 1
        seq = [mrs_report(t, n).weight for n in range(start, start + 40)]
        assert spec.valid_from == start
        assert spec.holds_on(seq, start)


def test_fit_examples():
    spec = fit_recurrence([1] * 6)
    assert spec.coeffs == (1,) and spec.describe() == "u(n) = u(n-1)"
    with pytest.raises(NoRecurrenceError):
        fit_recurrence([1, 2, 3, 5])
    with pytest.raises(InconsistentDataError):
        fit_recurrence([16, 8, 4, 2, 1])


def test_trailing_zero_shifts_validity():
    # zeros then a geometric tail: minimal connection polynomial ends in zeros
    seq = [5, 0, 0, 1, 2, 4, 8, 16, 32, 64]
    spec = fit_recurrence(seq, start_index=1)
    assert spec.coeffs == (2,)
    assert spec.valid_from == 4


def test_extend_examples():
    spec = mrs_recurrence(3)
    w = {n: mrs_report(3, n).weight for n in range(7, 14)}
    fwd = extend(spec, [w[n] for n in range(7, 14)], "forward", 2)
    assert fwd[-2:] == [8064, 16384]
    with pytest.raises(ValueError):
        extend(spec, [1, 2], "forward")
    odd = RecurrenceSpec((0, 3), 1)
    with pytest.raises(InconsistentDataError):
        extend(odd, [1, 1], "backward")


def test_spec_serialization():
    spec = RecurrenceSpec((2, 0, -5), 4)
    assert spec.charpoly == (5, 0, -2, 1)
    d = spec.to_dict()
    assert d == {"order": 3, "coeffs": [2, 0, -5], "charpoly": [5, 0, -2, 1], "valid_from": 4}
    assert RecurrenceSpec.from_dict(d) == spec
    assert RecurrenceSpec.from_charpoly(spec.charpoly, 4) == spec
    with pytest.raises(ValueError):
        RecurrenceSpec((1, 0), 1)


def test_root_moduli_examples():
    roots = root_moduli(mrs_recursion_poly(3))
    mods = sorted(r.modulus for r in roots)
    assert len(mods) == 7
    assert all(abs(m - SQRT2) < 1e-12 for m in mods[:6])
    assert abs(mods[6] - 2) < 1e-12
    assert [round(r.modulus, 12) for r in root_moduli((-2, 0, 1))] == [round(SQRT2, 12)] * 2


coeff_lists = st.lists(st.integers(-5, 5), min_size=1, max_size=10).filter(lambda c: c[-1] != 0)


@given(coeff_lists, st.data())
def test_fit_round_trip(coeffs, data):
    spec = RecurrenceSpec(tuple(coeffs), 1)
    r = spec.order
    seed = data.draw(st.lists(st.integers(-9, 9), min_size=r, max_size=r))
    seq = extend(spec, seed, "forward", 2 * r + 3)
    fitted = fit_recurrence(seq)
    # a degenerate seed can satisfy a shorter recursion; it must still reproduce the data
    assert fitted.order <= r
    assert fitted.holds_on(seq, 1)
    if fitted.order == r:
        assert fitted.coeffs == spec.coeffs
    impulse = extend(spec, [0] * (r - 1) + [1], "forward", 2 * r + 1)
    assert fit_recurrence(impulse) == spec


@given(coeff_lists.filter(lambda c: abs(c[-1]) == 1), st.data())
def test_backward_inverts_forward(coeffs, data):
    spec = RecurrenceSpec(tuple(coeffs), 1)
    r = spec.order
    seed = data.draw(st.lists(st.integers(-9, 9), min_size=r, max_size=r))
    seq = extend(spec, seed, "forward", 6)
    assert extend(spec, seq[-r:], "backward", 6) == seq
