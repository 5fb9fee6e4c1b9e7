import pytest
from hypothesis import given, settings

from quadchar2.brauer import class_equal, e2, frobenius_map
from quadchar2.fields import ARTIN_SCHREIER, INSEPARABLE, FieldError, QuadraticExtension
from quadchar2.forms import (
    BilinearForm,
    QuadraticForm,
    arf_class,
    block_relations,
    equivalent,
    is_hyperbolic,
    orth_sum,
    pfister,
    restrict_form,
    tensor,
)
from quadchar2.transfer import (
    TransferFunctional,
    arf_trivialize_descent,
    descend_form_search,
    descent_report,
    frobenius_reciprocity_check,
    transfer_bilinear,
    transfer_quadratic,
)

from conftest import elements, rff

F0 = rff()
T = F0.gen
K0 = QuadraticExtension(F0, INSEPARABLE, T)
S0 = TransferFunctional(K0)


def k_elements(degree=2, nonzero=False):
    return elements(K0, degree=degree, nonzero=nonzero)


def test_functional_normalization():
    assert S0(K0.one).is_zero()
    assert S0(K0.gen) == F0.one
    assert not S0.experimental
    assert TransferFunctional(QuadraticExtension(F0, ARTIN_SCHREIER, 1 / T)).experimental


def test_transfer_bilinear_examples():
    r = K0.gen
    assert transfer_bilinear(S0, BilinearForm(K0, (r,))) == BilinearForm(F0, (F0.one, T))
    assert transfer_bilinear(S0, BilinearForm(K0, (1 + r,))) == BilinearForm(F0, (F0.one, 1 + T))
    x = K0(1 + T)
    plane = transfer_bilinear(S0, BilinearForm(K0, (x,)))
    # metabolic: <c, c> is isotropic, its two entries agree
    assert plane.dim == 2 and plane.diagonal[0] == plane.diagonal[1]


def test_transfer_bilinear_rejects_zero():
    with pytest.raises(FieldError):
        transfer_bilinear(S0, BilinearForm(K0, (K0.zero,)))


@given(elements(degree=2), elements(degree=2, nonzero=True))
def test_transfer_bilinear_closed_form(x, y):
    z = K0(x) + K0(y) * K0.gen
    out = transfer_bilinear(S0, BilinearForm(K0, (z,)))
    assert out.diagonal == (y, y * (x * x + T * y * y))


def test_transfer_quadratic_examples():
    phi = QuadraticForm.of(K0, (K0.gen, 1 + T), (1, K0.gen))
    assert transfer_quadratic(S0, phi).dim == 2 * phi.dim
    assert is_hyperbolic(transfer_quadratic(S0, QuadraticForm.hyperbolic(K0, 2))).yes
    z, a = 1 + K0.gen, 1 / T
    lhs = transfer_quadratic(S0, pfister([z], a))
    rhs = orth_sum(transfer_quadratic(S0, QuadraticForm.of(K0, (1, a))), tensor(transfer_bilinear(S0, BilinearForm(K0, (z,))), QuadraticForm.of(F0, (1, a))))
    assert equivalent(lhs, rhs).yes


@settings(max_examples=15)
@given(k_elements(), k_elements(), k_elements(), k_elements())
def test_transfer_additive(a, b, c, d):
    phi, psi = QuadraticForm.of(K0, (a, b)), QuadraticForm.of(K0, (c, d))
    lhs = transfer_quadratic(S0, orth_sum(phi, psi))
    rhs = orth_sum(transfer_quadratic(S0, phi), transfer_quadratic(S0, psi))
    assert equivalent(lhs, rhs).yes


def test_frobenius_reciprocity_examples():
    phi = QuadraticForm.of(F0, (1, 1))
    assert frobenius_reciprocity_check(S0, BilinearForm(K0, (K0.one,)), phi).ok
    assert frobenius_reciprocity_check(S0, BilinearForm(K0, (K0.gen,)), phi).ok


@settings(max_examples=15)
@given(k_elements(nonzero=True), elements(degree=2), elements(degree=2))
def test_frobenius_reciprocity(z, a, b):
    assert frobenius_reciprocity_check(S0, BilinearForm(K0, (z,)), QuadraticForm.of(F0, (a, b))).ok


@settings(max_examples=15)
@given(k_elements(), k_elements(), k_elements(nonzero=True), k_elements())
def test_transfer_e2_is_frobenius(a, b, u, v):
    # a trivial-Arf form over K: scaled 2-fold Pfister forms
    phi = orth_sum(pfister([u], v), QuadraticForm.of(K0, (a, b), (a, b)))
    assert class_equal(e2(transfer_quadratic(S0, phi)), frobenius_map(e2(phi))).yes


def test_arf_trivialize_examples():
    psi = QuadraticForm.of(F0, (1, T), (T, 1))
    assert arf_trivialize_descent(psi, K0).form == psi
    out = arf_trivialize_descent(QuadraticForm.of(F0, (1, T * T + T)), K0)
    assert out.form == QuadraticForm.of(F0, (1, 0))


def test_arf_trivialize_over_artin_schreier():
    d = 1 / T
    L = QuadraticExtension(F0, ARTIN_SCHREIER, d)
    # Arf = d + (t^2 + t), nontrivial over F, trivial over F(wp^-1(d))
    psi = QuadraticForm.of(F0, (T, d / T), (1 + T, T))
    assert not arf_class(psi).is_trivial
    out = arf_trivialize_descent(psi, L)
    assert arf_class(out.form).is_trivial
    assert out.witness.verify()
    assert equivalent(restrict_form(out.form, L), restrict_form(psi, L)).yes


def test_arf_trivialize_needs_wp_over_k():
    with pytest.raises(FieldError):
        arf_trivialize_descent(QuadraticForm.of(F0, (1, 1)), K0)


@settings(max_examples=10)
@given(elements(degree=2), elements(degree=2, nonzero=True), k_elements(degree=1, nonzero=True))
def test_descend_planted(a, b, lam):
    psi0 = pfister([b], a)
    phi, _ = block_relations(restrict_form(psi0, K0), "R1", 0, lam)
    res = descend_form_search(phi)
    assert res.found
    assert descent_report(phi, res).yes


def test_descend_requires_extension():
    with pytest.raises(FieldError):
        descend_form_search(QuadraticForm.of(F0, (1, T)))
