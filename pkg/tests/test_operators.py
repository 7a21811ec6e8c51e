import random
from math import comb

import pytest

from multisym.errors import SelfCheckError
from multisym.invariants import (
    elementary, elementary_column, is_invariant, power_sum,
)
from multisym.operators import (
    PolarizationOp, check_newton_tilde, expand_newton_terms, flatten_tuple,
    frobenius_split, newton_rewrite, newton_terms, polarize,
    polarize_elementary, polarize_raw, power_to_elementary_one_column,
    validate_polarization_closed_form,
)
from multisym.poly import Poly, frobenius
from multisym.selftest import random_invariant, suite_polarization, suite_splitting


@pytest.mark.parametrize("p", [2, 3, 5])
def test_newton_tilde_over_integers(p):
    assert check_newton_tilde(p)


def test_newton_rewrite_p2():
    # M_(2) = E_1(x_1) M_(1); the zero power-sum term is dropped
    assert newton_rewrite((2,), 1, 2) == [(1, (1,), (1,))]


def test_newton_rewrite_p3_signs():
    # the degree-3 rewrite carries the alternating sign on the middle term
    assert newton_rewrite((3,), 1, 3) == [(2, (2,), (1,)), (1, (1,), (2,))]


def test_newton_rewrite_two_columns():
    terms = newton_rewrite((3, 3), 2, 3)
    assert [(gen, mt) for _, gen, mt in terms] == [
        ((0, 3), (3,)), ((0, 2), (3, 1)), ((0, 1), (3, 2)),
    ]


def test_newton_rewrite_precondition():
    with pytest.raises(ValueError):
        newton_rewrite((1,), 1, 2)


def test_unsigned_variant_fails_at_p3():
    # regression pinning the sign convention: without the alternating sign
    # the combination does not expand back to the power sum
    bad = newton_terms((3,), 1, 3, signed=False)
    assert expand_newton_terms(bad, 3, 1) != power_sum((3,), 3, 1)


def test_polarize_flatten_examples():
    op = PolarizationOp(1, 2, 2)
    assert polarize(power_sum((5,), 3, 2), op) == power_sum((3, 2), 3, 2)
    op1 = PolarizationOp(1, 2, 1)
    assert polarize(power_sum((4,), 3, 2), op1) == power_sum((3, 1), 3, 2)
    f = power_sum((5,), 3, 2)
    assert polarize(f, PolarizationOp(1, 2, 0)) == f


def test_polarize_validation():
    with pytest.raises(ValueError):
        PolarizationOp(1, 1, 1)
    with pytest.raises(ValueError):
        polarize(power_sum((2,), 3, 2), PolarizationOp(1, 3, 1), width=2)
    with pytest.raises(ValueError):
        polarize(power_sum((2,), 3, 2), PolarizationOp(1, 2, 3))


def test_polarize_preserves_invariance():
    rng = random.Random(2)
    for p in (2, 3):
        for _ in range(10):
            f = random_invariant(rng, p, 2, 3, 3)
            g = polarize_raw(f, 1, 2, 1)
            assert is_invariant(g)


def test_polarize_leibniz_rule():
    assert suite_polarization(seed=8, samples=30).passed


def test_polarize_elementary_closed_form():
    assert validate_polarization_closed_form(2) is True
    assert validate_polarization_closed_form(3) is True
    # too-large primes report unavailability instead of guessing
    assert validate_polarization_closed_form(11) is None
    coeff, moved = polarize_elementary((2,), 1, 2, 1, 3)
    assert (coeff, moved) == (comb(1, 1) % 3, (1, 1))
    assert polarize_elementary((1,), 1, 2, 2, 3) == (0, None)


def test_flatten_tuple_examples():
    assert flatten_tuple((5,), 1, 3) == (3, 2)
    assert flatten_tuple((4,), 1, 3) == (3, 1)
    assert flatten_tuple((1,), 1, 3) == (0, 1)
    with pytest.raises(ValueError):
        flatten_tuple((3,), 1, 3)  # exponent divisible by p


def test_flatten_tuple_shifts_occupied_column():
    assert flatten_tuple((5, 3), 1, 3) == (3, 2, 3)


@pytest.mark.parametrize("p", [2, 3])
def test_flatten_consistency_sweep(p):
    for a in range(0, 7):
        for b in range(0, 7 - a):
            alpha = tuple(v for v in (a, b))
            if sum(alpha) == 0:
                continue
            for col in (1, 2):
                if col <= len(alpha) and alpha[col - 1] % p:
                    flatten_tuple(alpha, col, p)  # verifies internally


def test_frobenius_split_examples():
    p = 2
    assert frobenius_split(power_sum((2, 2), p, 2)) == power_sum((1, 1), p, 2)
    assert frobenius_split(elementary_column(p, 1, p)).is_zero
    # T of a non-square monomial maps to zero: x^3 y + x y^3 in one column
    f = power_sum((1,), p, 1) ** 2 * elementary_column(2, 1, p, 1)
    assert frobenius_split(f).is_zero
    with pytest.raises(ValueError):
        frobenius_split(Poly.variable(p, p, 1, 1))


def test_splitting_axioms_randomized():
    assert suite_splitting(seed=21, samples=60).passed


def test_split_left_inverse_of_frobenius():
    rng = random.Random(31)
    for p in (2, 3):
        for _ in range(20):
            a = random_invariant(rng, p, 3, 3, 3)
            assert frobenius_split(frobenius(a)) == a


def test_one_column_newton():
    assert power_to_elementary_one_column(1, 1, 3) == [(1, ((1,),))]
    # p_2 = e_1^2 - 2 e_2 which collapses mod 2
    assert power_to_elementary_one_column(2, 1, 2) == [(1, ((1,), (1,)))]
    # p_3 = e_1 p_2 - e_2 p_1 + 3 e_3, and mod 3 everything but e_1^3 cancels
    assert power_to_elementary_one_column(3, 1, 3) == [(1, ((1,), (1,), (1,)))]
    with pytest.raises(ValueError):
        power_to_elementary_one_column(0, 1, 2)


@pytest.mark.parametrize("p", [2, 3])
def test_one_column_newton_sweep(p):
    for m in range(1, 9):
        for col in (1, 2):
            fragment = power_to_elementary_one_column(m, col, p)
            total = Poly.zero(p, p)
            for c, factors in fragment:
                prod = Poly.const(p, p, c)
                for beta in factors:
                    prod = prod * elementary(beta, p, col)
                total = total + prod
            assert total == power_sum((0,) * (col - 1) + (m,), p, col)
