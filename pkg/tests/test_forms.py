import pytest
from hypothesis import given, strategies as st

from quadchar2.fields import ARTIN_SCHREIER, INSEPARABLE, FieldError, FiniteField, QuadraticExtension
from quadchar2.forms import (
    BilinearForm,
    QuadraticForm,
    arf,
    arf_class,
    block_relations,
    equivalent,
    is_hyperbolic,
    is_isotropic,
    orth_sum,
    pfister,
    restrict_form,
    scale,
    tensor,
    witt_reduce,
)

from conftest import elements, rff

GF2 = FiniteField(1)


def blocks(F, *pairs):
    return QuadraticForm.of(F, *pairs)


@st.composite
def forms(draw, max_blocks=3, degree=2):
    n = draw(st.integers(1, max_blocks))
    pairs = [(draw(elements(degree=degree)), draw(elements(degree=degree))) for _ in range(n)]
    return QuadraticForm.of(rff(), *pairs)


def test_orth_sum_examples():
    phi = orth_sum(blocks(GF2, (1, 1)), blocks(GF2, (0, 0)))
    assert phi.blocks == ((GF2.one, GF2.one), (GF2.zero, GF2.zero))
    assert phi.dim == 4


@given(forms(), forms())
def test_orth_sum_dim_and_arf(phi, psi):
    s = orth_sum(phi, psi)
    assert s.dim == phi.dim + psi.dim
    assert arf(s) == arf(phi) + arf(psi)


def test_scale_examples(F, t):
    phi = blocks(F, (1, t))
    assert scale(F.one, phi) == phi
    lam = 1 + t
    assert scale(lam, phi)([1, 0]) == lam


@given(forms(), elements(degree=2, nonzero=True))
def test_scale_values_and_arf(phi, lam):
    K = lam.field
    v = [K.one] * phi.dim
    # (x, y) -> (x, lam y) carries lam*phi onto the rescaled blocks
    w = [lam if i % 2 else K.one for i in range(phi.dim)]
    assert scale(lam, phi)(w) == lam * phi(v)
    assert arf(scale(lam, phi)) == arf(phi)


def test_scale_rejects_zero(F, t):
    with pytest.raises(FieldError):
        scale(F.zero, blocks(F, (1, t)))


def test_tensor_examples(F, t):
    phi = blocks(F, (1, t))
    assert tensor(BilinearForm(F, (F.one,)), phi) == phi
    assert tensor(BilinearForm(F, (F.one, 1 + t)), phi) == pfister([1 + t], t)
    assert tensor(BilinearForm(F, (F.one, t, 1 + t)), phi).dim == 6


def test_pfister_examples(F, t):
    assert pfister([], t) == blocks(F, (1, t))
    p = pfister([t], 1 + t)
    assert p == orth_sum(blocks(F, (1, 1 + t)), scale(t, blocks(F, (1, 1 + t))))
    assert p.dim == 4
    assert arf_class(pfister([F.one], t)).is_trivial


def test_pfister_rejects_zero_slot(F, t):
    with pytest.raises(FieldError):
        pfister([F.zero], t)


def test_arf_examples(F, t):
    assert not arf_class(blocks(GF2, (1, 1))).is_trivial
    assert arf_class(blocks(GF2, (0, 0))).is_trivial
    assert arf_class(blocks(F, (1, t), (t, 1))).is_trivial


def test_block_relations_examples(F, t):
    new, w = block_relations(blocks(F, (1, t * t + t)), "R2", 0, t)
    assert new == blocks(F, (1, 0)) and w.verify()
    a, x = 1 + t, t
    new, w = block_relations(blocks(F, (1, a)), "R1", 0, x)
    assert new == blocks(F, (x * x, a / (x * x))) and w.verify()
    b, y = t * t + 1, 1 + t
    n = x * x + b * y * y
    src = blocks(F, (x * x, a / (x * x)), (n, a / n))
    new, w = block_relations(src, "R3", 0)
    assert new == blocks(F, (x * x, a / (x * x) + a / n), (b * y * y, a / n))
    assert w.verify()


@given(forms(max_blocks=2), st.sampled_from(["R1", "R2", "R3", "R4"]), elements(degree=2, nonzero=True))
def test_block_relations_preserve_arf(phi, rule, param):
    if rule == "R3" and len(phi.blocks) < 2:
        phi = orth_sum(phi, phi)
    new, w = block_relations(phi, rule, 0, param)
    assert w.verify()
    assert arf(new) == arf(phi) or arf_class(new) == arf_class(phi)


def test_is_isotropic_examples(F, t):
    d = is_isotropic(blocks(F, (0, 0)))
    assert d.yes and blocks(F, (0, 0))(d.certificate) == F.zero
    assert is_isotropic(blocks(GF2, (1, 1))).no
    assert is_isotropic(pfister([1 + t], 1 / t)).no


@given(forms(max_blocks=2))
def test_isotropy_witness_sound(phi):
    d = is_isotropic(phi, budget=2)
    if d.yes:
        assert any(not x.is_zero() for x in d.certificate)
        assert phi(d.certificate).is_zero()


def test_is_hyperbolic_examples(F, t):
    assert is_hyperbolic(QuadraticForm.hyperbolic(F, 2)).yes
    assert is_hyperbolic(blocks(GF2, (1, 1))).no
    b, c, c2 = t, 1 / t, 1 + t
    lhs = is_hyperbolic(orth_sum(pfister([b], c), pfister([b], c2)))
    rhs = is_hyperbolic(pfister([b], c + c2))
    assert lhs.verdict == rhs.verdict


def test_witt_reduce_examples(F, t):
    r = witt_reduce(QuadraticForm.hyperbolic(F, 2))
    assert r.anisotropic_part.dim == 0 and r.hyperbolic_count == 2
    aniso = pfister([1 + t], 1 / t)
    r = witt_reduce(aniso)
    assert r.anisotropic_part == aniso and r.hyperbolic_count == 0
    r = witt_reduce(pfister([t], t * t + t))
    assert r.anisotropic_part.dim == 0 and r.hyperbolic_count == 2
    assert r.witness.verify()


@given(forms(max_blocks=3))
def test_witt_reduce_dimension_count(phi):
    r = witt_reduce(phi, budget=2)
    assert r.anisotropic_part.dim + 2 * r.hyperbolic_count == phi.dim
    assert r.witness.verify()


def test_equivalent_examples(F, t):
    phi = pfister([t], 1 + t)
    assert equivalent(phi, phi).yes
    assert equivalent(blocks(GF2, (1, 1)), blocks(GF2, (0, 0))).no


@given(forms(max_blocks=2))
def test_equivalent_reflexive(phi):
    assert equivalent(phi, phi).yes


@given(forms(max_blocks=2), forms(max_blocks=2))
def test_equivalent_symmetric(phi, psi):
    assert equivalent(phi, psi).verdict == equivalent(psi, phi).verdict


def test_restrict_form_examples(F, t):
    K = QuadraticExtension(F, INSEPARABLE, t)
    phi = pfister([t], 1 + t)
    assert restrict_form(phi, K).dim == phi.dim
    x = K.gen + 1
    assert equivalent(blocks(K, (1, x)), blocks(K, (1, x * x))).yes
    assert is_isotropic(blocks(GF2, (1, 1))).no
    gf4 = QuadraticExtension(GF2, ARTIN_SCHREIER, GF2.one)
    assert is_isotropic(restrict_form(blocks(GF2, (1, 1)), gf4)).yes


@given(elements(degree=2), elements(degree=2, nonzero=True))
def test_pfister_isotropic_iff_hyperbolic(a, b):
    phi = pfister([b], a)
    iso, hyp = is_isotropic(phi, budget=3), is_hyperbolic(phi, budget=3)
    if not iso.unknown and not hyp.unknown:
        assert iso.yes == hyp.yes
