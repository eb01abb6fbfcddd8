"""Tests for dense polynomials over F_q."""

import numpy as np
import pytest

from finite_field import make_field
from polynomial import (
    NEG_INF,
    Polynomial,
    p_add,
    p_divrem,
    p_eval,
    p_gcd,
    p_mul,
    p_pow,
    p_sub,
    vanishing_polynomial,
    x_q_minus_x,
)

FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)]


def test_zero_polynomial(f3):
    zero = Polynomial.zero(f3)
    assert zero.degree == NEG_INF
    assert zero.is_zero and not zero
    assert str(zero) == "0"
    assert Polynomial(f3, [0, 0, 0]) == zero


def test_product_examples(f2, f3):
    x2 = Polynomial.x(f2)
    assert p_mul(x2, x2 + 1) == Polynomial(f2, [0, 1, 1])
    x3 = Polynomial.x(f3)
    assert p_pow(x3 - 1, 2) == Polynomial(f3, [1, 1, 1])


def test_power_examples(f2, f3):
    assert p_pow(Polynomial(f2, [0, 1, 1]), 2) == Polynomial(f2, [0, 0, 1, 0, 1])
    assert p_pow(x_q_minus_x(f3), 2) == Polynomial(f3, [0, 0, 1, 0, 1, 0, 1])
    assert p_pow(Polynomial.zero(f3), 0) == 1
    with pytest.raises(ValueError):
        p_pow(Polynomial.x(f3), -1)


def test_add_sub_cancel(f4):
    a = Polynomial(f4, [1, 2, 3])
    assert p_sub(a, a).is_zero
    assert p_add(a, a).is_zero


def test_divrem_examples(f2, f3):
    q, r = p_divrem(Polynomial(f2, [0, 1, 1]), Polynomial.x(f2))
    assert q == Polynomial(f2, [1, 1]) and r.is_zero
    q, r = p_divrem(Polynomial(f3, [1, 0, 1]), Polynomial(f3, [1, 1]))
    assert q == Polynomial(f3, [2, 1])
    assert r == Polynomial.constant(f3, 2)
    with pytest.raises(ZeroDivisionError):
        p_divrem(Polynomial.x(f3), Polynomial.zero(f3))


def test_exact_div(f3):
    vanishing = x_q_minus_x(f3)
    assert vanishing.exact_div(Polynomial.x(f3)) == Polynomial(f3, [2, 0, 1])
    with pytest.raises(ValueError):
        vanishing.exact_div(Polynomial(f3, [1, 0, 1]))


def test_gcd_examples(f2):
    numerator = Polynomial(f2, [1, 1, 0, 1, 0, 1, 1])
    denominator = Polynomial(f2, [0, 0, 1, 0, 1])
    assert p_gcd(numerator, denominator) == 1
    assert p_gcd(Polynomial(f2, [0, 1, 1]), Polynomial(f2, [0, 0, 1])) == Polynomial.x(f2)
    with pytest.raises(ValueError):
        p_gcd(Polynomial.zero(f2), Polynomial.zero(f2))


def test_gcd_is_monic(f3):
    a = Polynomial(f3, [0, 2])
    assert p_gcd(a, Polynomial.zero(f3)) == Polynomial.x(f3)


def test_eval_examples(f2, f3):
    assert p_eval(Polynomial(f2, [0, 1, 1]), f2.one) == f2.zero
    assert p_eval(x_q_minus_x(f3), f3.element(2)) == f3.zero
    assert p_eval(Polynomial(f3, [1, 1]), f3.element(1)) == f3.element(2)


@pytest.mark.parametrize("p, n", FIELDS)
def test_vanishing_polynomial(p, n):
    spec = make_field(p, n)
    assert vanishing_polynomial(spec) == x_q_minus_x(spec)


@pytest.mark.parametrize("p, n", [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)])
def test_every_element_is_a_root(p, n):
    spec = make_field(p, n)
    vanishing = x_q_minus_x(spec)
    for code in range(spec.q):
        assert not vanishing(code)


@pytest.mark.parametrize("p, n", [(2, 2), (3, 1), (5, 1), (3, 2), (2, 3)])
def test_divrem_reconstructs(p, n):
    spec = make_field(p, n)
    rng = np.random.default_rng(11)
    for _ in range(30):
        a = Polynomial.random(spec, 8, rng)
        b = Polynomial.random(spec, 3, rng)
        if b.is_zero:
            continue
        quotient, remainder = a.divrem(b)
        assert quotient * b + remainder == a
        assert remainder.degree < b.degree


@pytest.mark.parametrize("p, n", [(2, 2), (3, 1), (5, 1), (3, 2)])
def test_gcd_of_common_multiple(p, n):
    spec = make_field(p, n)
    rng = np.random.default_rng(5)
    for _ in range(20):
        a = Polynomial.random(spec, 4, rng)
        b = Polynomial.random(spec, 4, rng)
        c = Polynomial.random(spec, 3, rng)
        if a.is_zero or b.is_zero or c.is_zero:
            continue
        assert (a * c).gcd(b * c) == c.monic() * a.gcd(b)


@pytest.mark.parametrize("p, n", [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2)])
def test_freshman_dream(p, n):
    spec = make_field(p, n)
    rng = np.random.default_rng(3)
    for _ in range(20):
        a = Polynomial.random(spec, 4, rng)
        b = Polynomial.random(spec, 4, rng)
        assert p_pow(a + b, p) == p_pow(a, p) + p_pow(b, p)


def test_extension_products_match_schoolbook(f9):
    rng = np.random.default_rng(13)
    for _ in range(10):
        a = Polynomial.random(f9, 5, rng)
        b = Polynomial.random(f9, 4, rng)
        if a.is_zero or b.is_zero:
            continue
        product = [f9.zero] * (a.degree + b.degree + 1)
        for i, ai in enumerate(a.coefficients()):
            for j, bj in enumerate(b.coefficients()):
                product[i + j] = product[i + j] + ai * bj
        assert a * b == Polynomial(f9, [c.value for c in product])


def test_floor_division_is_not_supported(f3):
    with pytest.raises(TypeError):
        Polynomial.x(f3) // Polynomial.one(f3)
    quotient, remainder = Polynomial.monomial(f3, 2).divrem(Polynomial.x(f3))
    assert quotient == Polynomial.x(f3) and remainder.is_zero


def test_render(f2, f3, f4):
    assert str(Polynomial(f2, [1, 1, 0, 1, 0, 1, 1])) == "x^6+x^5+x^3+x+1"
    assert str(Polynomial(f3, [0, 0, 2])) == "2x^2"
    assert str(Polynomial(f3, [2, 1])) == "x+2"
    assert str(Polynomial(f4, [2, 3])) == "(t+1)x+t"


def test_json(f4):
    poly = Polynomial(f4, [1, 2, 3])
    assert poly.to_json() == [[1, 0], [0, 1], [1, 1]]
    assert Polynomial.from_json(f4, poly.to_json()) == poly


def test_mismatched_fields_raise(f2, f3):
    with pytest.raises(ValueError):
        Polynomial.x(f2) + Polynomial.x(f3)


def test_coefficient_codes_checked(f2):
    with pytest.raises(ValueError):
        Polynomial(f2, [0, 2])


def test_support_and_prime_field(f4):
    poly = Polynomial(f4, [1, 0, 0, 2])
    assert poly.support() == [0, 3]
    assert not poly.in_prime_field()
    assert Polynomial(f4, [1, 0, 1]).in_prime_field()
