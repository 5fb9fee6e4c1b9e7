import pytest
from hypothesis import given

from quadchar2.brauer import (
    BrauerClass,
    QuaternionSymbol,
    class_equal,
    e2,
    e2_well_defined_check,
    frobenius_map,
    invariants,
    local_invariant,
    norm_search_split,
    restrict_class,
    split_test,
    support,
    symbol_simplify,
)
from quadchar2.fields import ARTIN_SCHREIER, INSEPARABLE, FieldError, FiniteField, QuadraticExtension, infinity
from quadchar2.forms import QuadraticForm, block_relations, is_hyperbolic, orth_sum, pfister, scale

from conftest import elements


def sym(a, b):
    return QuaternionSymbol(a, b)


def cls(*syms, field=None):
    return BrauerClass.of(*syms, field=field)


def place(F, x):
    return next(v for v in support(cls(sym(F.one, x))) if not v.is_infinite)


def test_symbol_simplify_examples(F, t):
    a, b = 1 / t, 1 + t
    assert len(symbol_simplify(cls(sym(a, b), sym(a, b)))) == 0
    assert class_equal(symbol_simplify(cls(sym(a * a, b))), cls(sym(a, b))).yes
    assert len(symbol_simplify(cls(sym(t * t + t, b)))) == 0


@given(elements(degree=3), elements(degree=3, nonzero=True), elements(degree=2), elements(degree=2, nonzero=True))
def test_symbol_simplify_preserves_class(a, b, c, d):
    C = cls(sym(a, b), sym(c, d), sym(a + c, b))
    assert class_equal(symbol_simplify(C), C).yes


def test_split_test_examples(F, t):
    G = QuadraticExtension(FiniteField(1), ARTIN_SCHREIER, FiniteField(1).one)
    w = G.gen
    for a in (G.one, w, w + 1):
        for b in (G.one, w, w + 1):
            assert split_test(sym(a, b)).yes
    assert split_test(sym(1 / t, t)).yes
    assert split_test(sym(1 / t, 1 + t)).no


def test_local_invariant_examples(F, t):
    at_t, at_1t = place(F, t), place(F, 1 + t)
    assert local_invariant(sym(1 / t, t), at_t) == 0
    q = sym(1 / t, 1 + t)
    assert local_invariant(q, at_t) == 1
    assert local_invariant(q, at_1t) == 1
    assert local_invariant(q, infinity(F)) == 0
    assert set(invariants(cls(q))) == {at_t, at_1t}


def test_local_invariant_needs_rational_function_field(F, t):
    K = QuadraticExtension(F, INSEPARABLE, t)
    with pytest.raises(FieldError):
        local_invariant(sym(K.gen, K(t + 1)), infinity(F))


@given(elements(degree=3), elements(degree=3, nonzero=True))
def test_reciprocity(a, b):
    q = sym(a, b)
    places = support(cls(q)) or [infinity(a.field)]
    assert sum(local_invariant(q, v) for v in places) % 2 == 0


@given(elements(degree=2), elements(degree=2, nonzero=True))
def test_norm_search_agrees_with_invariants(a, b):
    q = sym(a, b)
    if norm_search_split(q, budget=2) is not None:
        assert split_test(q).yes


def test_class_equal_examples(F, t):
    c = cls(sym(1 / t, 1 + t))
    assert class_equal(c, c).yes
    assert class_equal(c, BrauerClass(F, ())).no
    a, a2, b = 1 / t, t * t + 1, 1 + t + t**3
    assert class_equal(cls(sym(a, b), sym(a2, b)), cls(sym(a + a2, b))).yes


@given(elements(degree=2), elements(degree=2, nonzero=True), elements(degree=2, nonzero=True))
def test_second_slot_biadditive(a, b, b2):
    assert class_equal(cls(sym(a, b), sym(a, b2)), cls(sym(a, b * b2))).yes


def test_frobenius_examples(F, t):
    K = QuadraticExtension(F, INSEPARABLE, t)
    r = K.gen
    out = frobenius_map(cls(sym(r, r)))
    assert out.field == F and out.symbols == (sym(t, t),)
    assert len(frobenius_map(BrauerClass(K, ()))) == 0


@given(elements(degree=3), elements(degree=3, nonzero=True))
def test_frobenius_kills_restrictions(a, b):
    F = a.field
    K = QuadraticExtension(F, INSEPARABLE, F.gen + 1)
    c = frobenius_map(restrict_class(cls(sym(a, b)), K))
    assert split_test(c).yes


def test_restrict_class_examples(F, t):
    a, b = 1 / t, 1 + t
    K = QuadraticExtension(F, INSEPARABLE, b)
    assert split_test(restrict_class(cls(sym(a, b)), K)).yes
    L = QuadraticExtension(F, ARTIN_SCHREIER, a)
    assert split_test(restrict_class(cls(sym(a, b)), L)).yes


def test_restrict_class_needs_extension(F, t):
    K = QuadraticExtension(F, INSEPARABLE, t)
    with pytest.raises(FieldError):
        restrict_class(BrauerClass(K, (sym(K.gen, K(t)),)), F)


def test_e2_examples(F, t):
    a, b = 1 / t, 1 + t
    assert class_equal(e2(pfister([b], a)), cls(sym(a, b))).yes
    assert len(e2(QuadraticForm.hyperbolic(F, 2))) == 0
    b1 = t
    b2 = b1 + t * t + t
    phi = QuadraticForm.of(F, (1, b1), (1, b2))
    assert split_test(e2(phi)).yes and is_hyperbolic(phi).yes


def test_e2_rejects_nontrivial_arf(F, t):
    with pytest.raises(FieldError):
        e2(QuadraticForm.of(F, (1, t)))


@given(elements(degree=2), elements(degree=2, nonzero=True), elements(degree=2), elements(degree=2, nonzero=True))
def test_e2_additive(a, b, c, d):
    phi, psi = pfister([b], a), scale(d, pfister([d], c))
    assert class_equal(e2(orth_sum(phi, psi)), e2(phi) + e2(psi)).yes


@given(elements(degree=2), elements(degree=2, nonzero=True), elements(degree=1, nonzero=True))
def test_e2_well_defined_under_rewrites(a, b, lam):
    phi = pfister([b], a)
    psi, _ = block_relations(phi, "R1", 1, lam)
    psi, _ = block_relations(psi, "R3", 0)
    assert e2_well_defined_check(phi, psi).yes


@given(elements(degree=2), elements(degree=2, nonzero=True))
def test_dim4_hyperbolic_iff_e2_trivial(a, b):
    phi = pfister([b], a)
    assert is_hyperbolic(phi).yes == split_test(e2(phi)).yes
