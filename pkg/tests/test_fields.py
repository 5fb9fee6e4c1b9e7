import pytest
from hypothesis import given

from quadchar2.fields import (
    ARTIN_SCHREIER,
    INSEPARABLE,
    FieldElement,
    FieldError,
    FiniteField,
    QuadraticExtension,
    TowerMismatch,
    UnsupportedTower,
    enumerate_places,
    infinity,
    rational_model,
)
from quadchar2.laurent import complete_at, log_residue_trace, residue

from conftest import elements


def sqrt_of(x):
    r = x.field.sqrt(x.v)
    return None if r is None else FieldElement(x.field, r)


def test_arith_examples(F, t):
    G = FiniteField(1)
    assert G.one + G.one == G.zero
    assert t * (1 / t) == F.one
    K = QuadraticExtension(F, INSEPARABLE, t)
    assert K.gen * K.gen == K(t)


def test_division_by_zero(F, t):
    with pytest.raises(ZeroDivisionError):
        t / F.zero


def test_tower_mismatch(F, t):
    K = QuadraticExtension(F, INSEPARABLE, t)
    L = QuadraticExtension(F, ARTIN_SCHREIER, t)
    with pytest.raises(TowerMismatch):
        K.gen + L.gen


def test_tower_depth_limit(F, t):
    K = QuadraticExtension(F, INSEPARABLE, t)
    K = QuadraticExtension(K, INSEPARABLE, K.gen)
    K = QuadraticExtension(K, INSEPARABLE, K.gen)
    with pytest.raises(UnsupportedTower):
        QuadraticExtension(K, INSEPARABLE, K.gen)


def test_extension_validity(F, t):
    with pytest.raises(FieldError):
        QuadraticExtension(F, INSEPARABLE, t * t)
    with pytest.raises(FieldError):
        QuadraticExtension(F, ARTIN_SCHREIER, t * t + t)


def test_is_square_examples(F, t):
    assert sqrt_of(t * t) == t
    assert sqrt_of(t) is None
    G = FiniteField(2)
    w = G.generator
    assert sqrt_of(w) == w * w


@pytest.mark.parametrize(
    "x, canonical, witness",
    [
        (lambda F, t: F.zero, lambda F, t: F.zero, lambda F, t: F.zero),
        (lambda F, t: F.one, lambda F, t: F.one, lambda F, t: F.zero),
        (lambda F, t: t * t + t, lambda F, t: F.zero, lambda F, t: t),
        (lambda F, t: 1 / (t * t), lambda F, t: 1 / t, lambda F, t: 1 / t),
    ],
    ids=["zero", "one", "wp-of-t", "inverse-square"],
)
def test_wp_reduce_examples(F, t, x, canonical, witness):
    assert F.wp_reduce(x(F, t)) == (canonical(F, t), witness(F, t))


def test_wp_reduce_finite():
    G = FiniteField(1)
    assert G.wp_reduce(G.zero) == (G.zero, G.zero)
    assert G.wp_reduce(G.one) == (G.one, G.zero)


@given(elements(degree=5))
def test_wp_reduce_identity(x):
    c, w = x.field.wp_reduce(x)
    assert c + w * w + w == x


@given(elements(degree=4), elements(degree=4))
def test_wp_canonical_is_class_function(x, y):
    K = x.field
    assert K.wp_reduce(x + y * y + y)[0] == K.wp_reduce(x)[0]


@given(elements(degree=4))
def test_square_roots(x):
    r = sqrt_of(x * x)
    assert r is not None and r * r == x * x


@given(elements(degree=3, nonzero=True), elements(degree=3, nonzero=True))
def test_field_axioms(x, y):
    assert (x * y) / y == x
    assert (x + y) * x == x * x + x * y
    assert x + x == x.field.zero


def test_enumerate_places_examples(F, t):
    assert [repr(p) for p in enumerate_places([t])] == ["t", "inf"]
    assert [repr(p) for p in enumerate_places([1 + t, 1 / t])] == ["t", "t + 1", "inf"]
    assert [repr(p) for p in enumerate_places([t * t + t + 1])] == ["t^2 + t + 1", "inf"]


def test_enumerate_places_rejects_zero(F):
    with pytest.raises(FieldError):
        enumerate_places([F.zero])


def test_complete_at_examples(F, t):
    at_t = enumerate_places([t])[0]
    assert repr(complete_at(1 / (1 + t), at_t, 3)) == "1 + u + u^2 + O(u^3)"
    s = complete_at(t, infinity(F))
    assert s.valuation() == -1 and s.coefficient(-1) == 1 and s.coefficient(0) == 0
    assert repr(complete_at(1 / (t * (1 + t)), at_t, 3)) == "u^-1 + 1 + u + O(u^2)"


@given(elements(degree=4, nonzero=True))
def test_complete_at_precision_consistency(x):
    for v in enumerate_places([x]):
        a, b = complete_at(x, v, 4), complete_at(x, v, 9)
        for e in range(a.low, a.order_bound):
            assert a.coefficient(e) == b.coefficient(e)


def test_residue_examples(F, t):
    at_t = enumerate_places([t])[0]
    assert residue(1 / t, t, at_t) == 0
    assert residue(1 / t, 1 + t, at_t) == 1
    assert residue(1 + t, 1 + t, at_t) == 0


@given(elements(degree=6, nonzero=True), elements(degree=6, nonzero=True))
def test_residue_theorem(f, g):
    places = enumerate_places([f, g])
    assert sum(log_residue_trace(f, g, v) for v in places) % 2 == 0


def test_rational_model_inverse(F, t):
    K = QuadraticExtension(F, INSEPARABLE, t)
    M = rational_model(K)
    x = K.gen + K(t) * K.gen * K.gen
    assert M.inverse(M(x)) == x


def test_gf4_generator_name():
    G = FiniteField(2)
    assert repr(G) == "GF(4)"
    assert repr(G.generator) == "w"
