import random

import pytest

from qnspace.bicharacter import commutation_factor, pairing
from qnspace.qspace import (Element, check_algebra, monomial_box, monomials_up_to,
                            random_element, random_exponent, swap_scalar,
                            total_degree)
from qnspace.scalar import LaurentScalar


def x(n, i):
    return Element.generator(n, i)


def test_generator_merge():
    # x2 x1 = q^-1 x1 x2
    assert x(2, 2) * x(2, 1) == Element.monomial(2, (1, 1), LaurentScalar.q_power(-1))


def test_unit_monomial():
    rng = random.Random(0)
    f = random_element(rng, 3)
    assert Element.one(3) * f == f
    assert f * Element.one(3) == f


def test_square_of_x1x2():
    f = x(2, 1) * x(2, 2)
    assert f * f == Element.monomial(2, (2, 2), LaurentScalar.q_power(-1))


def test_swap_oracle_examples():
    assert swap_scalar((0, 1), (1, 0)) == LaurentScalar.q_power(-1)
    assert swap_scalar((2, 1), (0, 0)) == LaurentScalar.one()
    assert swap_scalar((0, 2), (1, 0)) == LaurentScalar.q_power(-2)


def test_merge_equals_swap_oracle():
    rng = random.Random(11)
    for _ in range(400):
        n = rng.randint(1, 4)
        a = random_exponent(rng, n, -3, 4, 4)
        b = random_exponent(rng, n, -3, 4, 4)
        assert LaurentScalar.q_power(pairing(a, b)) == swap_scalar(a, b), (a, b)


def test_eta_commutativity():
    rng = random.Random(12)
    for _ in range(200):
        n = rng.randint(2, 4)
        a = random_exponent(rng, n, -3, 4, 4)
        b = random_exponent(rng, n, -3, 4, 4)
        fa, fb = Element.monomial(n, a), Element.monomial(n, b)
        assert fa * fb == (fb * fa).scale(commutation_factor(a, b))


def test_associativity_is_cocycle_consequence():
    rng = random.Random(13)
    for _ in range(150):
        n = rng.randint(1, 4)
        f, g, h = (random_element(rng, n, 2) for _ in range(3))
        assert (f * g) * h == f * (g * h)


def test_x1_inverse():
    for n in (1, 2, 3):
        assert Element.generator(n, 1) * Element.x1_inverse(n) == Element.one(n)
        assert Element.x1_inverse(n) * Element.generator(n, 1) == Element.one(n)
    # x1^-1 commutes with powers of x1
    f = Element.monomial(3, (4, 0, 0))
    assert Element.x1_inverse(3) * f == f * Element.x1_inverse(3)


def test_linear_operations():
    n = 2
    f = x(n, 1) + x(n, 2)
    assert f.scale(2) == x(n, 1).scale(2) + x(n, 2).scale(2)
    assert 2 * f == f.scale(2)
    assert f - f == Element.zero(n)
    assert not (f - f)
    assert (-f) + f == Element.zero(n)


def test_exponent_domain_enforced():
    with pytest.raises(ValueError):
        Element.monomial(2, (0, -1))
    with pytest.raises(ValueError):
        Element.monomial(3, (1, 2, -3))
    # x1 may be negative
    Element.monomial(3, (-5, 0, 0))


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        x(2, 1) * x(3, 1)
    with pytest.raises(ValueError):
        x(2, 1) + x(3, 1)


def test_total_degree():
    assert total_degree((2, 1, 0)) == 3
    assert total_degree((-1, 1, 0)) == 0
    assert total_degree((0, 0, 0)) == 0


def test_power_operator():
    n = 2
    assert x(n, 1) ** -3 == Element.monomial(n, (-3, 0))
    assert x(n, 2) ** 2 == Element.monomial(n, (0, 2))
    with pytest.raises(ValueError):
        (x(n, 1) + x(n, 2)) ** -1


def test_classical_limit_commutes():
    rng = random.Random(14)
    for _ in range(100):
        n = rng.randint(1, 3)
        f = random_element(rng, n, 2)
        g = random_element(rng, n, 2)
        assert (f * g).evaluate_coeffs(1) == (g * f).evaluate_coeffs(1)


def test_monomial_enumerators():
    box = monomial_box(2, 1)
    assert set(box) == {(-1, 0), (-1, 1), (0, 0), (0, 1), (1, 0), (1, 1)}
    up = monomials_up_to(2, 1)
    assert set(up) == {(0, 0), (1, 0), (-1, 0), (0, 1)}
    assert all(abs(a[0]) + sum(a[1:]) <= 3 for a in monomials_up_to(3, 3))
    assert all(a[0] >= -1 for a in monomials_up_to(3, 3, x1_min=-1))


def test_string_and_json_round_trip():
    f = Element(2, {(1, 1): LaurentScalar.q_power(-1), (0, 0): LaurentScalar({0: 2, 1: 1})})
    assert str(f) == "(q + 2) + q^-1 x1 x2"
    assert Element.from_json(f.to_json()) == f
    alphas = [term["alpha"] for term in f.to_json()["terms"]]
    assert alphas == sorted(alphas)


def test_check_algebra_suite():
    report = check_algebra(3, pairs=150, triples=60, seed=3)
    assert report.ok, report.render_text()
