"""Tests for G = Aut(F_q(x)/F_q) as normalized Moebius maps."""

import numpy as np
import pytest

from finite_field import make_field
from moebius import MoebiusMap, apply, closure, compose, enumerate_group, group_generators, inverse
from polynomial import Polynomial
from rational import RationalFunction

SMALL_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1)]
FIELDS = SMALL_FIELDS + [(7, 1), (2, 3), (3, 2)]


def _random_function(spec, rng):
    den = Polynomial.random(spec, 2, rng)
    return RationalFunction(Polynomial.random(spec, 3, rng), den if den else Polynomial.one(spec))


@pytest.mark.parametrize("p, n", FIELDS)
def test_group_order(p, n):
    spec = make_field(p, n)
    q = spec.q
    maps = enumerate_group(spec)
    assert len(maps) == (q + 1) * q * (q - 1)
    assert len(set(maps)) == len(maps)


def test_enumeration_order(f2):
    assert [str(s) for s in enumerate_group(f2)] == [
        "x",
        "x+1",
        "1 / x",
        "1 / (x+1)",
        "x / (x+1)",
        "(x+1) / x",
    ]


def test_enumeration_lists_affine_maps_first(f3):
    maps = enumerate_group(f3)
    affine = [s.is_affine for s in maps]
    assert affine == sorted(affine, reverse=True)
    assert sum(affine) == 6


@pytest.mark.parametrize("p, n", SMALL_FIELDS)
def test_maps_are_nondegenerate_and_normalized(p, n):
    spec = make_field(p, n)
    for s in enumerate_group(spec):
        assert s.a * s.d != s.b * s.c
        assert next(e for e in s.entries() if e) == spec.one
        assert s.image().extension_degree() == 1


def test_degenerate_and_unnormalized_maps_rejected(f3):
    with pytest.raises(ValueError):
        MoebiusMap.normalized(1, 1, 1, 1, spec=f3)
    with pytest.raises(ValueError):
        MoebiusMap(f3.element(2), f3.zero, f3.zero, f3.one)


def test_compose_examples(f2, f3):
    shift = MoebiusMap.normalized(1, 1, 0, 1, spec=f2)
    flip = MoebiusMap.normalized(0, 1, 1, 0, spec=f2)
    assert compose(shift, flip) == MoebiusMap.normalized(1, 1, 1, 0, spec=f2)
    assert str(compose(shift, flip)) == "(x+1) / x"

    scale = MoebiusMap.normalized(2, 0, 0, 1, spec=f3)
    shift3 = MoebiusMap.normalized(1, 1, 0, 1, spec=f3)
    assert compose(shift3, scale) == MoebiusMap.normalized(2, 1, 0, 1, spec=f3)
    assert str(compose(shift3, scale)) == "2x+1"


def test_inverse_examples(f2, f3):
    shift = MoebiusMap.normalized(1, 1, 0, 1, spec=f2)
    assert inverse(shift) == shift
    scale = MoebiusMap.normalized(2, 0, 0, 1, spec=f3)
    assert inverse(scale) == scale


@pytest.mark.parametrize("p, n", SMALL_FIELDS)
def test_group_axioms_exhaustive(p, n):
    spec = make_field(p, n)
    maps = enumerate_group(spec)
    members = set(maps)
    identity = MoebiusMap.identity(spec)
    for s in maps:
        assert compose(identity, s) == s == compose(s, identity)
        assert compose(s, inverse(s)) == identity
        for t in maps:
            assert compose(s, t) in members


def test_composition_is_associative():
    spec = make_field(5)
    maps = enumerate_group(spec)
    rng = np.random.default_rng(29)
    for i, j, k in rng.integers(0, len(maps), size=(200, 3)):
        s, t, u = maps[i], maps[j], maps[k]
        assert compose(compose(s, t), u) == compose(s, compose(t, u))


def test_apply_examples(f2, f3):
    x_squared = RationalFunction(Polynomial.monomial(f2, 2))
    shift = MoebiusMap.normalized(1, 1, 0, 1, spec=f2)
    assert apply(shift, x_squared) == Polynomial(f2, [1, 0, 1])
    assert apply(MoebiusMap.identity(f2), x_squared) == x_squared

    golden = RationalFunction(Polynomial(f2, [1, 1, 0, 1, 0, 1, 1]), Polynomial(f2, [0, 0, 1, 0, 1]))
    assert apply(MoebiusMap.normalized(0, 1, 1, 0, spec=f2), golden) == golden

    constant = RationalFunction.constant(f3, 2)
    assert apply(MoebiusMap.normalized(0, 1, 1, 0, spec=f3), constant) == constant


def test_apply_is_a_right_action(f3):
    shift = MoebiusMap.normalized(1, 1, 0, 1, spec=f3)
    scale = MoebiusMap.normalized(2, 0, 0, 1, spec=f3)
    x_squared = RationalFunction(Polynomial.monomial(f3, 2))
    # f(s(t(x))) = (2x+1)^2
    assert apply(compose(shift, scale), x_squared) == Polynomial(f3, [1, 1, 1])
    assert apply(scale, apply(shift, x_squared)) == Polynomial(f3, [1, 1, 1])
    assert apply(shift, apply(scale, x_squared)) == Polynomial(f3, [1, 2, 1])


@pytest.mark.parametrize("p, n", [(2, 1), (3, 1), (2, 2)])
def test_action_law_sampled(p, n):
    spec = make_field(p, n)
    maps = enumerate_group(spec)
    rng = np.random.default_rng(31)
    for _ in range(10):
        f = _random_function(spec, rng)
        s, t = (maps[i] for i in rng.integers(0, len(maps), size=2))
        assert apply(compose(s, t), f) == apply(t, apply(s, f))


def test_apply_keeps_degree(f4):
    rng = np.random.default_rng(37)
    maps = enumerate_group(f4)
    for _ in range(10):
        f = _random_function(f4, rng)
        if f.is_constant:
            continue
        s = maps[rng.integers(0, len(maps))]
        assert apply(s, f).extension_degree() == f.extension_degree()


@pytest.mark.parametrize("p, n, count", [(2, 1, 2), (3, 1, 3), (2, 2, 3), (5, 1, 3)])
def test_generators(p, n, count):
    spec = make_field(p, n)
    generators = group_generators(spec)
    assert len(generators) == count
    assert closure(generators) == set(enumerate_group(spec))


def test_closure_needs_generators():
    with pytest.raises(ValueError):
        closure([])


def test_mismatched_fields_raise(f2, f3):
    with pytest.raises(ValueError):
        compose(MoebiusMap.identity(f2), MoebiusMap.identity(f3))


def test_json(f4):
    s = MoebiusMap.normalized(0, 1, 1, 2, spec=f4)
    assert s.to_json() == {"a": [0, 0], "b": [1, 0], "c": [1, 0], "d": [0, 1]}
