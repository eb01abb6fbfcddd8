"""Tests for F_q(x) as canonical reduced fractions."""

import numpy as np
import pytest

from finite_field import make_field
from polynomial import Polynomial
from rational import RationalFunction, extension_degree, rf_add, rf_inv, rf_mul, rf_new, rf_pow


def _x(spec):
    return Polynomial.x(spec)


def test_reduces_common_factor(f2):
    f = rf_new(Polynomial(f2, [0, 1, 1]), _x(f2))
    assert f.num == Polynomial(f2, [1, 1])
    assert f.den == 1


def test_denominator_is_monic(f3):
    f = rf_new(Polynomial(f3, [0, 2]), Polynomial.constant(f3, 2))
    assert f.num == _x(f3)
    assert f.den == 1
    g = rf_new(Polynomial.one(f3), Polynomial(f3, [0, 2]))
    assert g.den == _x(f3)
    assert g.num == Polynomial.constant(f3, 2)


def test_zero_is_canonical(f3):
    zero = rf_new(Polynomial.zero(f3), Polynomial(f3, [1, 1]))
    assert zero.is_zero
    assert zero.den == 1
    assert zero == 0


def test_zero_denominator_raises(f3):
    with pytest.raises(ZeroDivisionError):
        rf_new(_x(f3), Polynomial.zero(f3))
    with pytest.raises(ZeroDivisionError):
        rf_inv(RationalFunction(Polynomial.zero(f3)))


def test_add_example(f2):
    a = rf_new(Polynomial.one(f2), _x(f2))
    b = rf_new(Polynomial.one(f2), Polynomial(f2, [1, 1]))
    assert rf_add(a, b) == rf_new(Polynomial.one(f2), Polynomial(f2, [0, 1, 1]))


def test_pow_example(f2):
    f = rf_new(Polynomial(f2, [1, 1]), _x(f2))
    cube = rf_pow(f, 3)
    assert cube.num == Polynomial(f2, [1, 1, 1, 1])
    assert cube.den == Polynomial.monomial(f2, 3)
    assert rf_pow(f, -1) == rf_inv(f)
    assert rf_pow(f, 0) == 1


def test_inverse(f3):
    f = rf_new(Polynomial(f3, [1, 2, 1]), Polynomial(f3, [0, 1]))
    assert rf_mul(f, rf_inv(f)) == 1
    assert f / f == 1


def test_canonical_form_is_idempotent(f9):
    rng = np.random.default_rng(17)
    for _ in range(10):
        den = Polynomial.random(f9, 3, rng)
        if den.is_zero:
            continue
        f = RationalFunction(Polynomial.random(f9, 4, rng), den)
        assert RationalFunction(f.num, f.den) == f
        assert f.num.gcd(f.den) == 1 or f.is_zero


@pytest.mark.parametrize("p, n", [(3, 1), (2, 2), (5, 1)])
def test_field_axioms_sampled(p, n):
    spec = make_field(p, n)
    rng = np.random.default_rng(23)

    def sample():
        den = Polynomial.random(spec, 2, rng)
        return RationalFunction(Polynomial.random(spec, 2, rng), den if den else Polynomial.one(spec))

    for _ in range(10):
        a, b, c = sample(), sample(), sample()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == 0
        if not b.is_zero:
            assert (a / b) * b == a


def test_extension_degree_examples(f2):
    golden = rf_new(Polynomial(f2, [1, 1, 0, 1, 0, 1, 1]), Polynomial(f2, [0, 0, 1, 0, 1]))
    assert extension_degree(golden) == 6
    assert extension_degree(RationalFunction(Polynomial.monomial(f2, 2))) == 2
    assert extension_degree(RationalFunction.x(f2)) == 1
    with pytest.raises(ValueError):
        extension_degree(RationalFunction.constant(f2, 1))


def test_render(f2, f3):
    golden = rf_new(Polynomial(f2, [1, 1, 0, 1, 0, 1, 1]), Polynomial(f2, [0, 0, 1, 0, 1]))
    assert str(golden) == "(x^6+x^5+x^3+x+1) / (x^4+x^2)"
    assert str(rf_new(Polynomial.one(f3), _x(f3))) == "1 / x"
    assert str(RationalFunction(Polynomial(f3, [1, 1]))) == "x+1"


def test_json(f4):
    f = rf_new(Polynomial(f4, [2, 1]), Polynomial(f4, [3, 0, 1]))
    assert RationalFunction.from_json(f4, f.to_json()) == f


def test_mismatched_fields_raise(f2, f3):
    with pytest.raises(ValueError):
        RationalFunction.x(f2) + RationalFunction.x(f3)
