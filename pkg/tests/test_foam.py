from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from webskein.constants import MOD2_BETTI_TOTAL
from webskein.foam import (
    MIN_BUBBLE_ACTION, Action, Foam, make_psi, make_psi2_minus, min_action_table, moduli_dim,
    psi_closed_form,
)


@pytest.mark.parametrize("n, chi, self_int, tetra", [
    (0, 1, Fraction(2), 0),
    (2, 3, Fraction(1), 1),
    (3, 4, Fraction(1, 2), 3),
])
def test_psi_aggregates(n, chi, self_int, tetra):
    f = make_psi(n)
    assert (f.euler_char, f.self_int, f.tetra_points) == (chi, self_int, tetra)


def test_psi2_minus_is_not_psi2():
    m = make_psi2_minus()
    assert (m.euler_char, m.self_int, m.tetra_points) == (2, -1, 1)
    assert make_psi(2).euler_char == 3


@pytest.mark.parametrize("n, kappa, expected", [
    (0, Fraction(0), -1),
    (1, Fraction(1, 32), 0),
    (2, Fraction(0), 0),
    (3, Fraction(1, 32), 0),
    (1, Fraction(0), Fraction(-1, 4)),
])
def test_lemma_values(n, kappa, expected):
    assert moduli_dim(make_psi(n), Action(kappa)) == expected


def test_closed_form_symbolic():
    # dim - 8 kappa is a polynomial in n; compare coefficients via enough sample points
    import sympy

    n, k = sympy.symbols("n kappa")
    chi = 1 + n
    si = 2 - n / 2
    tetra = n * (n - 1) / 2
    general = 8 * k + chi + si / 2 - tetra / 2 - 3
    assert sympy.simplify(general - (8 * k - (1 - n / 2) ** 2)) == 0
    for m in range(9):
        assert moduli_dim(make_psi(m), 0) == psi_closed_form(m, 0)


@given(st.integers(0, 40), st.fractions(min_value=0, max_value=10))
def test_dim_minus_action_is_constant(n, kappa):
    d = moduli_dim(make_psi(n), kappa)
    assert d - 8 * kappa == moduli_dim(make_psi(n), 0)
    assert d == psi_closed_form(n, kappa)


def test_psi2_minus_dimension_is_rational():
    d = moduli_dim(make_psi2_minus(), Action(0))
    assert d == -2 and isinstance(d, Fraction)


@pytest.mark.parametrize("n", range(4))
def test_min_action_table_consistent(n):
    entry = min_action_table(n)
    assert moduli_dim(make_psi(n), entry.action) == entry.formal_dim


def test_min_action_table_entries():
    assert min_action_table(0).holonomy == "order-2" and min_action_table(0).automorphisms == "O(2)"
    assert min_action_table(2).automorphisms == "V4"
    assert min_action_table(3).action.kappa == Fraction(1, 32)
    with pytest.raises(ValueError):
        min_action_table(4)


def test_bubble_quantum_exceeds_table_actions():
    assert MIN_BUBBLE_ACTION == Fraction(1, 8)
    for n in (1, 3):
        assert min_action_table(n).action.kappa < MIN_BUBBLE_ACTION


def test_betti_constants():
    assert MOD2_BETTI_TOTAL == {"FLAG": 6, "SO3": 4}


def test_validation():
    with pytest.raises(ValueError):
        Action(Fraction(-1, 32))
    with pytest.raises(ValueError):
        make_psi(-1)
    with pytest.raises(ValueError):
        Foam("bad", 1, 0, -1)
    assert moduli_dim(make_psi(3), "1/32") == 0
